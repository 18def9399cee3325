"""Round-based burning: simulation, the spread oracle and the exact solver."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .core import (
    GuardExceeded,
    Hypergraph,
    HypergraphError,
    SolveResult,
    VertexLike,
    VertexSet,
    component_masks,
    connected_components,
    effective_edge_count,
    iter_bits,
    max_independent_set,
)
from .lazy import lazy_burning_number_exact

DEFAULT_BURN_GUARD = 18
DEFAULT_SPREAD_GUARD = 12
DEFAULT_SPREAD_ROUNDS = 6


class Verdict(str, enum.Enum):
    COMPLETE = "valid-and-complete"
    INCOMPLETE = "valid-but-incomplete"
    NON_VALID = "non-valid"


@dataclass(frozen=True)
class FireState:
    """Vertices on fire at the end of ``round`` and when each one caught."""

    burned: VertexSet
    burn_round: Mapping[int, int]
    round: int


@dataclass(frozen=True)
class Schedule:
    sources: tuple[int, ...]
    trace: tuple[FireState, ...]
    verdict: Verdict
    invalid_round: int | None = None
    redundant_rounds: tuple[int, ...] = field(default=())

    @property
    def is_valid(self) -> bool:
        return self.verdict is not Verdict.NON_VALID

    @property
    def is_complete(self) -> bool:
        return self.verdict is Verdict.COMPLETE

    @property
    def length(self) -> int:
        return len(self.sources)

    @property
    def completion_round(self) -> int | None:
        for state in self.trace:
            if len(state.burned) == state.burned.n:
                return state.round
        return None

    def describe(self, H: Hypergraph) -> str:
        if self.verdict is Verdict.NON_VALID:
            return f"{self.verdict.value} at round {self.invalid_round}"
        return self.verdict.value


def propagate_step(H: Hypergraph, burned: VertexLike) -> VertexSet:
    """Vertices that catch fire from ``burned`` in one round of propagation."""
    return VertexSet(H.spread(H.vset(burned).mask), H.n)


def run_schedule(H: Hypergraph, sources: Sequence[int | str]) -> Schedule:
    """Play the sources round by round.

    In round r the fire spreads from F_{r-1} while u_r is ignited. A source
    caught by this round's spread is redundant but legal; a source already in
    F_{r-1} stops the simulation with a non-valid verdict.
    """
    if not sources:
        raise HypergraphError("a schedule needs at least one source")
    seq = tuple(H.vertex(u) for u in sources)
    burned = 0
    when: dict[int, int] = {}
    trace = []
    redundant = []
    for r, u in enumerate(seq, start=1):
        bit = 1 << u
        if burned & bit:
            return Schedule(seq, tuple(trace), Verdict.NON_VALID, r, tuple(redundant))
        new = H.spread(burned)
        if new & bit:
            redundant.append(r)
        new |= bit
        for v in iter_bits(new):
            when[v] = r
        burned |= new
        trace.append(FireState(VertexSet(burned, H.n), dict(when), r))
    verdict = Verdict.COMPLETE if burned == H.full_mask else Verdict.INCOMPLETE
    return Schedule(seq, tuple(trace), verdict, None, tuple(redundant))


def is_burning_sequence(H: Hypergraph, sources: Sequence[int | str]) -> bool:
    return run_schedule(H, sources).is_complete


def max_spread(
    H: Hypergraph,
    r: int,
    max_vertices: int = DEFAULT_SPREAD_GUARD,
    max_rounds: int = DEFAULT_SPREAD_ROUNDS,
) -> int:
    """Most vertices on fire after round ``r`` over every valid schedule.

    Exhaustive: tracks every reachable burned set round by round. A fully
    burned set is carried forward unchanged.
    """
    if r < 1:
        raise HypergraphError("round index must be at least 1")
    if H.n > max_vertices or r > max_rounds:
        raise GuardExceeded(
            f"max_spread guard: n={H.n} (<= {max_vertices}), r={r} (<= {max_rounds})"
        )
    full = H.full_mask
    reach = {0}
    for _ in range(r):
        nxt = set()
        for F in reach:
            if F == full:
                nxt.add(F)
                continue
            FP = F | H.spread(F)
            for u in iter_bits(full & ~F):
                nxt.add(FP | 1 << u)
        reach = nxt
    return max(F.bit_count() for F in reach)


class _Search:
    """Depth-bounded DFS over source choices with a shared failure table."""

    def __init__(self, H: Hypergraph):
        self.H = H
        self.full = H.full_mask
        self.inert = H.inert_mask
        self.nodes = 0
        self.failed: set[tuple[int, int]] = set()
        comps = component_masks(H)
        subs = connected_components(H)
        self.comps = [
            (cm, lazy_burning_number_exact(G, max_vertices=G.n).value,
             tuple(e for e in H.active_edges if e & ~cm == 0))
            for cm, G in zip(comps, subs)
        ]

    def seeds_needed(self, burned: int) -> int:
        """Lower bound on extra seeds for ``burned`` to lazily burn everything.

        Untouched components need their own lazy number; a touched component
        needs at least one seed, and at least its unburned count minus the
        edges that can still fire.
        """
        cl = self.H.closure(burned)
        total = 0
        for cm, bl, edges in self.comps:
            inside = cl & cm
            if inside == cm:
                continue
            if not inside:
                total += bl
                continue
            left = (cm & ~cl).bit_count()
            live = sum(1 for e in edges if e & ~cl)
            total += max(1, left - live)
        return total

    def dfs(self, F: int, m: int) -> list[int] | None:
        self.nodes += 1
        H = self.H
        FP = F | H.spread(F)
        unburned = self.full & ~FP
        if m == 1:
            if not unburned:
                rest = self.full & ~F
                return [(rest & -rest).bit_length() - 1] if rest else None
            if not unburned & (unburned - 1):
                return [unburned.bit_length() - 1]
            return None
        if not unburned:
            return None
        key = (F, m)
        if key in self.failed:
            return None
        inert_left = (self.inert & unburned).bit_count()
        if inert_left > m:
            self.failed.add(key)
            return None
        # with no inert vertex left the last source lies in a live edge, so
        # every source but the last must already suffice as a lazy set
        budget = m if inert_left else m - 1
        if self.seeds_needed(FP) > budget:
            self.failed.add(key)
            return None
        if inert_left == m:
            candidates = self.inert & unburned
        else:
            # never pick a vertex this round's spread already ignites
            candidates = unburned
        for u in iter_bits(candidates):
            rest = self.dfs(FP | 1 << u, m - 1)
            if rest is not None:
                return [u, *rest]
        self.failed.add(key)
        return None


def burning_bounds(H: Hypergraph) -> tuple[int, int]:
    """Cheap ``(lower, upper)`` bracket for b(H) used to seed the search."""
    n = H.n
    bl = lazy_burning_number_exact(H, max_vertices=n).value
    # dropping the last source of an optimal schedule leaves a lazy burning
    # set whenever that source sits in an edge of size >= 2; a vertex whose
    # only edges are singletons behaves like an isolated one here
    lower = bl + (1 if n >= 2 and not H.has_inert else 0)
    lower = max(lower, n - effective_edge_count(H))
    for G in connected_components(H):
        lower = max(lower, G.n - effective_edge_count(G) + (1 if G.n >= 2 else 0))
    if H.has_singleton_or_empty:
        upper = n
    else:
        upper = min(n, len(max_independent_set(H)) + 1)
    return lower, upper


def burning_number_exact(
    H: Hypergraph,
    max_vertices: int = DEFAULT_BURN_GUARD,
    max_depth: int | None = None,
) -> SolveResult:
    """Exact burning number by iterative deepening on the schedule length.

    The witness is the lexicographically smallest optimal schedule among
    those that use a redundant source only in the final round.
    """
    if H.n > max_vertices:
        raise GuardExceeded(f"burning solver guard: {H.n} vertices > {max_vertices}")
    lower, upper = burning_bounds(H)
    search = _Search(H)
    for k in range(lower, upper + 1):
        if max_depth is not None and k > max_depth:
            raise GuardExceeded(f"burning solver depth guard: b(H) > {max_depth}")
        seq = search.dfs(0, k)
        if seq is not None:
            sched = run_schedule(H, seq)
            if not sched.is_complete or sched.length != k:
                raise AssertionError(f"solver witness {seq} does not re-simulate")
            return SolveResult(k, sched, search.nodes, (lower, upper))
    raise AssertionError(f"no schedule within the proven upper bound {upper}")


def burn_via_independent_set(H: Hypergraph) -> Schedule:
    """Burn a maximum independent set in order, then finish with one source.

    Members already on fire, or igniting this round, are skipped. Needs a
    hypergraph without singleton or empty edges; the result has at most
    alpha(H) + 1 sources.
    """
    if H.has_singleton_or_empty:
        raise HypergraphError("construction needs no singleton or empty edges")
    S = list(max_independent_set(H))
    full = H.full_mask
    burned = 0
    seq = []
    while burned != full:
        FP = burned | H.spread(burned)
        pending = [u for u in S if not FP >> u & 1]
        if pending:
            u = pending[0]
        else:
            rest = (full & ~FP) or (full & ~burned)
            u = (rest & -rest).bit_length() - 1
        seq.append(u)
        burned = FP | 1 << u
    sched = run_schedule(H, seq)
    if not sched.is_complete or sched.length > len(S) + 1:
        raise AssertionError("independent-set schedule broke its length guarantee")
    return sched
