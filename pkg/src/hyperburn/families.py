"""Witness families, closed forms and explicit optimal sequences.

Sequences are returned as 0-based vertex indices of the generated hypergraph,
whose labels are ``v1..vn`` in index order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .core import Hypergraph, HypergraphError, component_masks

FAMILIES = (
    "tight-path",
    "loose-path",
    "single-edge",
    "disjoint-edges",
    "star",
    "nested",
    "strwk",
    "graph-path",
)


def _labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def ceil_sqrt(x: int) -> int:
    if x < 0:
        raise ValueError("square root of a negative number")
    if x == 0:
        return 0
    return isqrt(x - 1) + 1


def gen_tight_path(k: int, n: int) -> Hypergraph:
    """Windows ``{v_i, ..., v_{i+k-1}}`` for ``i = 1..n-k+1``."""
    if k < 2 or n < k:
        raise HypergraphError(f"tight path needs k >= 2 and n >= k (got k={k}, n={n})")
    return Hypergraph(n, [range(i, i + k) for i in range(n - k + 1)], _labels(n))


def gen_graph_path(n: int) -> Hypergraph:
    if n < 1:
        raise HypergraphError("path needs at least one vertex")
    if n == 1:
        return Hypergraph(1, [], _labels(1))
    return gen_tight_path(2, n)


def gen_loose_path(k: int, m: int) -> Hypergraph:
    """k-uniform loose path with ``m`` edges and ``m(k-1)+1`` vertices."""
    if k < 3 or m < 1:
        raise HypergraphError(f"loose path needs k >= 3 and m >= 1 (got k={k}, m={m})")
    return gen_loose_path_sizes([k] * m)


def loose_path_of_order(k: int, n: int) -> Hypergraph:
    if k < 3 or n < k or (n - 1) % (k - 1):
        raise HypergraphError(f"no {k}-uniform loose path has {n} vertices")
    return gen_loose_path(k, (n - 1) // (k - 1))


def gen_loose_path_sizes(sizes: Sequence[int]) -> Hypergraph:
    """Chain of edges of the given sizes, consecutive edges sharing one vertex.

    This covers loose paths with degree-one vertices deleted; the sizes make
    the deletion explicit.
    """
    sizes = list(sizes)
    if not sizes or any(s < 2 for s in sizes):
        raise HypergraphError("loose path edge sizes must all be at least 2")
    edges = []
    start = 0
    for s in sizes:
        edges.append(range(start, start + s))
        start += s - 1
    n = start + 1
    return Hypergraph(n, edges, _labels(n))


def gen_single_edge(n: int) -> Hypergraph:
    if n < 2:
        raise HypergraphError("single-edge family needs n >= 2")
    return Hypergraph(n, [range(n)], _labels(n))


def gen_disjoint_edges(sizes: Sequence[int]) -> Hypergraph:
    sizes = list(sizes)
    if not sizes or any(s < 2 for s in sizes):
        raise HypergraphError("disjoint edges must all have size at least 2")
    edges = []
    start = 0
    for s in sizes:
        edges.append(range(start, start + s))
        start += s
    return Hypergraph(start, edges, _labels(start))


def gen_star_family(n: int) -> Hypergraph:
    """Triples ``{v1, v2, vi}`` for ``i = 3..n``."""
    if n < 3:
        raise HypergraphError("star family needs n >= 3")
    return Hypergraph(n, [(0, 1, i) for i in range(2, n)], _labels(n))


def gen_nested_family(n: int) -> Hypergraph:
    """Prefix edges ``{v1, v2}, {v1, v2, v3}, ..., {v1, ..., vn}``."""
    if n < 3:
        raise HypergraphError("nested family needs n >= 3")
    return Hypergraph(n, [range(j) for j in range(2, n + 1)], _labels(n))


def gen_strwk_family(n: int) -> Hypergraph:
    """Triples ``{v1, v2, vi}`` plus the edge ``{v3, ..., vn}``."""
    if n < 5:
        raise HypergraphError("strwk family needs n >= 5")
    edges = [(0, 1, i) for i in range(2, n)] + [range(2, n)]
    return Hypergraph(n, edges, _labels(n))


# -- closed forms -------------------------------------------------------------


def tight3_max_spread(r: int) -> int:
    """floor((r^2 + 1) / 2)."""
    if r < 1:
        raise HypergraphError("round index must be at least 1")
    return (r * r + 1) // 2


def tight3_burning_number(n: int) -> int:
    """ceil(sqrt(2n - 1)) in exact integer arithmetic."""
    if n < 3:
        raise HypergraphError("tight 3-uniform paths have at least 3 vertices")
    return ceil_sqrt(2 * n - 1)


def path_burning_number(n: int) -> int:
    if n < 1:
        raise HypergraphError("path needs at least one vertex")
    return ceil_sqrt(n)


def _perfect_tight3(k: int) -> list[int]:
    """1-based positions of the seeds that burn exactly floor((k^2+1)/2) vertices."""
    seq = []
    offset = 0  # 2 * sum_{i<s} (k - 2i + 1)
    for s in range(1, (k + 1) // 2 + 1):
        a = k - 2 * s + 2 + offset
        seq.append(a)
        if 2 * s <= k:
            seq.append(a - 1)
        offset += 2 * (k - 2 * s + 1)
    return seq


def tight3_optimal_sequence(n: int) -> list[int]:
    """Optimal schedule on ``gen_tight_path(3, n)``.

    Built for the smallest perfectly burnable order N >= n, after which the
    N - n lowest vertices are deleted; a deleted member of the first seed is
    replaced so the first seed becomes the two lowest survivors.
    """
    k = tight3_burning_number(n)
    N = tight3_max_spread(k)
    d = N - n
    seq = [p - d for p in _perfect_tight3(k)]
    if seq[0] < 1 or seq[1] < 1:
        seq[0], seq[1] = 1, 2
    return [p - 1 for p in seq]


def path_optimal_sequence(n: int) -> list[int]:
    """Optimal schedule on the graph path of order ``n``.

    For a square order k^2 the i-th source from the end sits at
    ``k^2 - i^2 - i``; other orders truncate the next square from below.
    """
    k = path_burning_number(n)
    N = k * k
    d = N - n
    seq = [N - i * i - i for i in range(k - 1, -1, -1)]
    seq = [p - d for p in seq]
    if seq[0] < 1:
        seq[0] = 1
    return [p - 1 for p in seq]


# -- dispatch -----------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family: str
    k: int | None = None
    n: int | None = None
    m: int | None = None
    sizes: tuple[int, ...] | None = None

    def build(self) -> Hypergraph:
        return build_family(self)


def _need(spec: FamilySpec, *names: str) -> list:
    vals = [getattr(spec, name) for name in names]
    missing = [name for name, val in zip(names, vals) if val is None]
    if missing:
        raise HypergraphError(f"family {spec.family!r} needs {', '.join(missing)}")
    return vals


def build_family(spec: FamilySpec) -> Hypergraph:
    f = spec.family
    if f == "tight-path":
        k, n = _need(spec, "k", "n")
        return gen_tight_path(k, n)
    if f == "loose-path":
        if spec.sizes is not None:
            return gen_loose_path_sizes(spec.sizes)
        k = _need(spec, "k")[0]
        if spec.m is not None:
            return gen_loose_path(k, spec.m)
        return loose_path_of_order(k, _need(spec, "n")[0])
    if f == "single-edge":
        return gen_single_edge(*_need(spec, "n"))
    if f == "disjoint-edges":
        return gen_disjoint_edges(*_need(spec, "sizes"))
    if f == "star":
        return gen_star_family(*_need(spec, "n"))
    if f == "nested":
        return gen_nested_family(*_need(spec, "n"))
    if f == "strwk":
        return gen_strwk_family(*_need(spec, "n"))
    if f == "graph-path":
        return gen_graph_path(*_need(spec, "n"))
    raise HypergraphError(f"unknown family {f!r}; choose from {', '.join(FAMILIES)}")


# -- random instances ---------------------------------------------------------


def random_hypergraph(
    rng: random.Random,
    n: int,
    m: int,
    sizes: tuple[int, int] = (2, 4),
    allow_degenerate: bool = False,
) -> Hypergraph:
    """``m`` random edges on ``n`` vertices with sizes drawn from ``sizes``.

    With ``allow_degenerate`` the edge size may also be 0 or 1 and repeats
    are kept, so the result can carry singleton, empty and parallel edges.
    """
    lo, hi = sizes
    if allow_degenerate:
        lo = 0
    if m and lo > n:
        raise HypergraphError(f"edges of size >= {lo} need at least {lo} vertices, got {n}")
    edges = []
    for _ in range(m):
        size = rng.randint(lo, min(hi, n))
        edges.append(rng.sample(range(n), size))
    return Hypergraph(n, edges)


def random_connected_simple(rng: random.Random, n: int, sizes: tuple[int, int] = (2, 4)) -> Hypergraph:
    """Random simple connected hypergraph: a spanning chain of edges plus extras."""
    if n < 2:
        raise HypergraphError("connected simple hypergraph needs n >= 2")
    order = list(range(n))
    rng.shuffle(order)
    edges: set[tuple[int, ...]] = set()
    covered = [order[0]]
    i = 1
    while i < n:
        size = rng.randint(sizes[0], min(sizes[1], n))
        fresh = order[i : i + size - 1]
        anchor = rng.sample(covered, min(len(covered), size - len(fresh)))
        edge = tuple(sorted(anchor + fresh))
        edges.add(edge)
        covered += fresh
        i += len(fresh)
    for _ in range(rng.randint(0, n)):
        size = rng.randint(sizes[0], min(sizes[1], n))
        edges.add(tuple(sorted(rng.sample(range(n), size))))
    H = Hypergraph(n, sorted(edges))
    assert len(component_masks(H)) == 1
    return H
