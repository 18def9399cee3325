"""Machine-checkable reports on the inequalities relating n, E, b_L, b and alpha.

Every verdict in a report can be recomputed from the report's numbers alone
(see :meth:`BoundsReport.recheck`).
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .burning import DEFAULT_BURN_GUARD, burning_number_exact
from .core import (
    Hypergraph,
    HypergraphError,
    VertexLike,
    VertexSet,
    connected_components,
    effective_edge_count,
    is_connected,
    max_independent_set,
    strong_induced_sub,
    weak_induced_sub,
)
from .lazy import DEFAULT_LAZY_GUARD, is_lazy_burning_set, lazy_burning_number_exact

INEQUALITY_NAMES = (
    "VminusE_le_bL",
    "bL_le_b",
    "bL_lt_b",
    "bL_le_alpha",
    "b_le_alpha_plus_1",
    "chain_2_14",
)

ALPHA_GATE = (
    "singleton or empty edges present: a vertex carrying a singleton edge is in "
    "no independent set but is never reached by propagation either"
)

STRICT_GATE = (
    "a vertex lies only in singleton or empty edges: it is not isolated, yet "
    "propagation never reaches it, so it must be a source in both games"
)


@dataclass(frozen=True)
class Inequality:
    name: str
    relation: str
    lhs: int | None
    rhs: int | None
    applicable: bool
    holds: bool | None = None
    tight: bool | None = None
    reason: str | None = None


@dataclass(frozen=True)
class BoundsReport:
    n: int
    edges: int
    effective_edges: int
    alpha: int | None
    b_lazy: int
    b: int
    has_isolated: bool
    has_inert: bool
    has_singleton_or_empty: bool
    connected: bool
    simple: bool
    inequalities: tuple[Inequality, ...] = field(default=())

    def __getitem__(self, name: str) -> Inequality:
        for ineq in self.inequalities:
            if ineq.name == name:
                return ineq
        raise KeyError(name)

    @property
    def all_hold(self) -> bool:
        return all(i.holds for i in self.inequalities if i.applicable)

    def recheck(self) -> bool:
        """True when the stored verdicts match ones recomputed from the numbers."""
        return _verdicts(self) == self.inequalities

    def to_dict(self) -> dict:
        d = asdict(self)
        d["inequalities"] = [asdict(i) for i in self.inequalities]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "BoundsReport":
        d = dict(d)
        d["inequalities"] = tuple(Inequality(**i) for i in d["inequalities"])
        return cls(**d)

    def to_text(self) -> str:
        lines = []
        for key in (
            "n", "edges", "effective_edges", "alpha", "b_lazy", "b",
            "has_isolated", "has_inert", "has_singleton_or_empty", "connected", "simple",
        ):
            lines.append(f"{key}={format_value(getattr(self, key))}")
        for i in self.inequalities:
            if i.applicable and i.name == "chain_2_14":
                lines.append(
                    f"{i.name}={i.lhs}<={self.b_lazy}<{self.b}<={i.rhs} "
                    f"holds={format_value(i.holds)} tight={format_value(i.tight)}"
                )
            elif i.applicable:
                lines.append(
                    f"{i.name}={format_value(i.lhs)}{i.relation}{format_value(i.rhs)} "
                    f"holds={format_value(i.holds)} tight={format_value(i.tight)}"
                )
            else:
                lines.append(f"{i.name}=not-applicable reason={i.reason}")
        return "\n".join(lines) + "\n"


def format_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _check(name, lhs, rel, rhs) -> Inequality:
    holds = lhs <= rhs if rel == "<=" else lhs < rhs
    tight = lhs == rhs if rel == "<=" else lhs == rhs - 1
    return Inequality(name, rel, lhs, rhs, True, holds, tight)


def _gated(name, rel, reason) -> Inequality:
    return Inequality(name, rel, None, None, False, reason=reason)


def _verdicts(r) -> tuple[Inequality, ...]:
    out = [
        _check("VminusE_le_bL", r.n - r.effective_edges, "<=", r.b_lazy),
        _check("bL_le_b", r.b_lazy, "<=", r.b),
    ]
    if r.n >= 2 and not r.has_inert:
        out.append(_check("bL_lt_b", r.b_lazy, "<", r.b))
    elif r.n >= 2 and not r.has_isolated:
        out.append(_gated("bL_lt_b", "<", STRICT_GATE))
    else:
        out.append(_gated("bL_lt_b", "<", "needs |V| >= 2 and no isolated vertex"))
    if r.alpha is None:
        out.append(_gated("bL_le_alpha", "<=", ALPHA_GATE))
        out.append(_gated("b_le_alpha_plus_1", "<=", ALPHA_GATE))
    else:
        out.append(_check("bL_le_alpha", r.b_lazy, "<=", r.alpha))
        out.append(_check("b_le_alpha_plus_1", r.b, "<=", r.alpha + 1))
    if r.simple and not r.has_isolated and r.alpha is not None:
        low = r.n - r.edges
        holds = low <= r.b_lazy < r.b <= r.alpha + 1
        tight = low == r.b_lazy and r.b_lazy == r.b - 1 and r.b == r.alpha + 1
        out.append(Inequality("chain_2_14", "<=,<,<=", low, r.alpha + 1, True, holds, tight))
    else:
        out.append(_gated("chain_2_14", "<=,<,<=", "needs a simple hypergraph with no isolated vertex"))
    return tuple(out)


def bounds_report(
    H: Hypergraph,
    max_vertices: int = DEFAULT_BURN_GUARD,
    lazy_max_vertices: int = DEFAULT_LAZY_GUARD,
) -> BoundsReport:
    b = burning_number_exact(H, max_vertices=max_vertices).value
    bl = lazy_burning_number_exact(H, max_vertices=lazy_max_vertices).value
    alpha = None if H.has_singleton_or_empty else len(max_independent_set(H))
    base = BoundsReport(
        n=H.n,
        edges=len(H.edges),
        effective_edges=effective_edge_count(H),
        alpha=alpha,
        b_lazy=bl,
        b=b,
        has_isolated=H.has_isolated,
        has_inert=H.has_inert,
        has_singleton_or_empty=H.has_singleton_or_empty,
        connected=is_connected(H),
        simple=H.is_simple,
    )
    return BoundsReport(**{**asdict(base), "inequalities": _verdicts(base)})


# -- disconnected hypergraphs -------------------------------------------------


@dataclass(frozen=True)
class CompositionReport:
    component_orders: tuple[int, ...]
    component_b: tuple[int, ...]
    component_b_lazy: tuple[int, ...]
    b: int
    b_lazy: int
    lazy_additive: bool
    max_le_b: bool
    b_le_sum: bool
    refined_applicable: bool
    b_le_sum_minus_k_plus_1: bool | None
    refined_tight: bool | None

    @property
    def k(self) -> int:
        return len(self.component_orders)

    @property
    def refined_strict(self) -> bool | None:
        if not self.refined_applicable:
            return None
        return self.b < sum(self.component_b) - self.k + 1

    @property
    def all_hold(self) -> bool:
        ok = self.lazy_additive and self.max_le_b and self.b_le_sum
        if self.refined_applicable:
            ok = ok and bool(self.b_le_sum_minus_k_plus_1)
        return ok

    def to_dict(self) -> dict:
        return asdict(self)


def disconnected_composition_check(
    H: Hypergraph, max_vertices: int = DEFAULT_BURN_GUARD
) -> CompositionReport:
    """Compare b and b_L of ``H`` with those of its components."""
    comps = connected_components(H)
    if len(comps) < 2:
        raise HypergraphError("composition check needs a disconnected hypergraph")
    lazy_guard = max(max_vertices, DEFAULT_LAZY_GUARD)
    cb = tuple(burning_number_exact(G, max_vertices=max_vertices).value for G in comps)
    cbl = tuple(lazy_burning_number_exact(G, max_vertices=lazy_guard).value for G in comps)
    b = burning_number_exact(H, max_vertices=max_vertices).value
    bl = lazy_burning_number_exact(H, max_vertices=lazy_guard).value
    k = len(comps)
    refined = all(G.n > 1 for G in comps)
    cap = sum(cb) - k + 1
    return CompositionReport(
        component_orders=tuple(G.n for G in comps),
        component_b=cb,
        component_b_lazy=cbl,
        b=b,
        b_lazy=bl,
        lazy_additive=bl == sum(cbl),
        max_le_b=max(cb) <= b,
        b_le_sum=b <= sum(cb),
        refined_applicable=refined,
        b_le_sum_minus_k_plus_1=(b <= cap) if refined else None,
        refined_tight=(b == cap) if refined else None,
    )


# -- subhypergraphs -----------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityReport:
    parent: tuple[int, int]
    strong: tuple[int, int]
    weak: tuple[int, int]
    weak_le_strong_b: bool
    weak_le_strong_b_lazy: bool
    parent_comparison_applicable: bool
    weak_le_parent_b: bool | None
    weak_le_parent_b_lazy: bool | None

    @property
    def all_hold(self) -> bool:
        ok = self.weak_le_strong_b and self.weak_le_strong_b_lazy
        if self.parent_comparison_applicable:
            ok = ok and bool(self.weak_le_parent_b) and bool(self.weak_le_parent_b_lazy)
        return ok

    def to_dict(self) -> dict:
        return asdict(self)


def subhypergraph_monotonicity_check(
    H: Hypergraph, W: VertexLike, max_vertices: int = DEFAULT_BURN_GUARD
) -> MonotonicityReport:
    """Pairs are ``(b, b_L)`` for ``H``, ``H[W]`` and the weak restriction to ``W``."""
    G1 = strong_induced_sub(H, W)
    G2 = weak_induced_sub(H, W)

    def numbers(G):
        return (
            burning_number_exact(G, max_vertices=max_vertices).value,
            lazy_burning_number_exact(G, max_vertices=max(max_vertices, DEFAULT_LAZY_GUARD)).value,
        )

    p, s, w = numbers(H), numbers(G1), numbers(G2)
    applicable = len(G2.edges) == len(H.edges) and not any(len(e) == 1 for e in G2.edges)
    return MonotonicityReport(
        parent=p,
        strong=s,
        weak=w,
        weak_le_strong_b=w[0] <= s[0],
        weak_le_strong_b_lazy=w[1] <= s[1],
        parent_comparison_applicable=applicable,
        weak_le_parent_b=(w[0] <= p[0]) if applicable else None,
        weak_le_parent_b_lazy=(w[1] <= p[1]) if applicable else None,
    )


# -- diagnostics --------------------------------------------------------------


@dataclass(frozen=True)
class SubsetProbe:
    sequence: tuple[int, ...]
    b: int
    b_lazy: int
    found: bool
    subset: VertexSet | None

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "b": self.b,
            "b_lazy": self.b_lazy,
            "found": self.found,
            "subset": None if self.subset is None else list(self.subset),
        }


def probe_open_question_1(
    H: Hypergraph, max_vertices: int = DEFAULT_BURN_GUARD
) -> SubsetProbe:
    """Does the solver's optimal sequence contain a minimum lazy burning set?

    Reports the answer for one optimal sequence; nothing is asserted.
    """
    res = burning_number_exact(H, max_vertices=max_vertices)
    bl = lazy_burning_number_exact(H, max_vertices=max(max_vertices, DEFAULT_LAZY_GUARD)).value
    seq = res.witness.sources
    for combo in combinations(seq, bl):
        if is_lazy_burning_set(H, combo):
            return SubsetProbe(seq, res.value, bl, True, VertexSet.of(H.n, combo))
    return SubsetProbe(seq, res.value, bl, False, None)
