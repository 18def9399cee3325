# Checking the inequality chain and composition rules on a few instances.
#
# Run with:  python3 demos/bounds_tour.py
import random

from hyperburn import (
    bounds_report,
    disconnected_composition_check,
    subhypergraph_monotonicity_check,
)
from hyperburn import gallery
from hyperburn.families import gen_single_edge, gen_star_family, random_connected_simple

# %% One 8-edge: every link in the chain is tight.
print(bounds_report(gen_single_edge(8)).to_text())

# %% A star leaves a lot of room above b.
r = bounds_report(gen_star_family(10))
c = r["chain_2_14"]
print(f"star(10): {c.lhs} <= b_L={r.b_lazy} < b={r.b} <= {c.rhs}")

# %% Reports carry enough data to re-derive every verdict.
print("recheck:", r.recheck())

# %% Disconnected instances: b sits between the largest part and sum - k + 1.
for H in (gallery.two_tight_paths(), gallery.path_edge_pair()):
    comp = disconnected_composition_check(H)
    print(f"parts b={comp.component_b}  b={comp.b}  ceiling={sum(comp.component_b) - comp.k + 1}")

# %% Restricting to a vertex subset never makes burning harder.
m = subhypergraph_monotonicity_check(gallery.overlapping_triples(), ["u1", "u2", "u3"])
print("parent", m.parent, "strong", m.strong, "weak", m.weak)

# %% A quick random sweep.
rng = random.Random(0)
held = sum(bounds_report(random_connected_simple(rng, rng.randint(2, 9))).all_hold for _ in range(100))
print(f"{held}/100 random instances satisfy every applicable inequality")
