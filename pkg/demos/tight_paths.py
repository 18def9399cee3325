# Burning a tight 3-uniform path, round by round and lazily.
#
# Run with:  python3 demos/tight_paths.py
from hyperburn import (
    burning_number_exact,
    lazy_burning_number_exact,
    max_spread,
    run_schedule,
)
from hyperburn.families import (
    gen_tight_path,
    tight3_burning_number,
    tight3_max_spread,
    tight3_optimal_sequence,
)

# %% A small instance: windows of three consecutive vertices.
H = gen_tight_path(3, 8)
print(H)
for e in H.edges:
    print("  edge", H.names(e))

# %% The exact solver and its witness.
res = burning_number_exact(H)
print("b =", res.value, "witness", H.names(res.witness.sources))

# Replay it and watch the fire grow.
s = run_schedule(H, res.witness.sources)
for st in s.trace:
    print(f"  round {st.round}: {len(st.burned)} burned")

# %% Lazily, two adjacent seeds already ignite every window in turn.
lz = lazy_burning_number_exact(H)
print("b_L =", lz.value, "set", H.names(lz.witness))

# %% How far can r rounds of fire reach?  Brute force against the closed form.
H12 = gen_tight_path(3, 12)
for r in range(1, 5):
    print(f"  r={r}: brute force {max_spread(H12, r)}, formula {tight3_max_spread(r)}")

# %% The explicit schedule scales far beyond what search can reach.
for n in (10, 50, 200):
    s = run_schedule(gen_tight_path(3, n), tight3_optimal_sequence(n))
    print(f"  n={n}: complete at round {s.completion_round}, closed form {tight3_burning_number(n)}")
