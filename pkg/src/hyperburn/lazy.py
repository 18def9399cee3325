"""Lazy burning: closure of a seed set and the exact lazy burning number."""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GuardExceeded,
    SolveResult,
    Hypergraph,
    HypergraphError,
    VertexLike,
    VertexSet,
    component_masks,
    effective_edge_count,
)

DEFAULT_LAZY_GUARD = 22


@dataclass(frozen=True)
class LazyRun:
    initial: VertexSet
    closure: VertexSet
    steps: tuple[tuple[int, VertexSet], ...]

    @property
    def complete(self) -> bool:
        return len(self.closure) == self.closure.n


def lazy_closure(H: Hypergraph, S: VertexLike) -> LazyRun:
    """Propagate from ``S`` in synchronous waves until nothing changes."""
    seeds = H.vset(S)
    burned = seeds.mask
    steps = []
    t = 0
    while True:
        new = H.spread(burned)
        if not new:
            break
        t += 1
        steps.append((t, VertexSet(new, H.n)))
        burned |= new
    return LazyRun(seeds, VertexSet(burned, H.n), tuple(steps))


def is_lazy_burning_set(H: Hypergraph, S: VertexLike) -> bool:
    return H.closure(H.vset(S).mask) == H.full_mask


def lazy_burning_number_exact(
    H: Hypergraph, max_vertices: int = DEFAULT_LAZY_GUARD
) -> SolveResult:
    """Smallest lazy burning set, searched by increasing cardinality.

    Inert vertices (no non-singleton edge) are seeded up front. Candidate sets
    never contain a whole non-singleton edge: dropping one vertex of such an
    edge leaves the closure unchanged, so some optimum always survives.
    Candidates of each size come in lexicographic order, so the witness is the
    lexicographically smallest minimum set.
    """
    n = H.n
    if n > max_vertices:
        raise GuardExceeded(f"lazy solver guard: {n} vertices > {max_vertices}")
    full = H.full_mask
    forced = H.inert_mask
    free = [v for v in range(n) if not forced >> v & 1]
    # edges keyed by their largest member: checked once that member is chosen
    closing: dict[int, list[int]] = {}
    for e in H.active_edges:
        closing.setdefault(e.bit_length() - 1, []).append(e)

    lower = max(
        n - effective_edge_count(H), len(component_masks(H)), forced.bit_count()
    )
    nodes = 0

    def pick(i: int, chosen: int, need: int) -> int | None:
        nonlocal nodes
        nodes += 1
        if need == 0:
            seeds = forced | chosen
            return seeds if H.closure(seeds) == full else None
        for j in range(i, len(free) - need + 1):
            v = free[j]
            with_v = chosen | 1 << v
            if any(e & ~with_v == 0 for e in closing.get(v, ())):
                continue
            found = pick(j + 1, with_v, need - 1)
            if found is not None:
                return found
        return None

    for size in range(lower, n + 1):
        need = size - forced.bit_count()
        if need < 0 or need > len(free):
            continue
        found = pick(0, 0, need)
        if found is not None:
            return SolveResult(size, VertexSet(found, n), nodes, (lower, n))
    raise AssertionError("V(H) itself is always a lazy burning set")


def lazy_set_from_sequence(H: Hypergraph, seq) -> VertexSet:
    """Drop the final source of a complete burning sequence.

    ``seq`` is a :class:`~hyperburn.burning.Schedule` or a list of sources.
    The result is a lazy burning set whenever the last source lies in some
    non-singleton edge; the postcondition is checked before returning.
    """
    from .burning import Schedule, run_schedule

    sched = seq if isinstance(seq, Schedule) else run_schedule(H, seq)
    if not sched.is_complete:
        raise HypergraphError("sequence is not a valid, complete burning sequence")
    last = sched.sources[-1]
    if H.isolated_mask >> last & 1:
        raise HypergraphError(f"last source {H.labels[last]} is an isolated vertex")
    if H.inert_mask >> last & 1:
        # a singleton edge cannot carry fire to its only member
        raise HypergraphError(
            f"last source {H.labels[last]} lies only in singleton or empty edges"
        )
    out = VertexSet.of(H.n, sched.sources[:-1])
    if not is_lazy_burning_set(H, out):
        raise AssertionError("prefix of a burning sequence failed to burn lazily")
    return out
