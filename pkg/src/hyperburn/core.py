"""Hypergraph data model, text format, structural queries and subhypergraphs.

Vertices are dense indices ``0..n-1``; string labels are a presentation layer.
Vertex sets are Python ints used as bit-vectors throughout the solvers and are
wrapped in :class:`VertexSet` at the public boundary.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union


class HypergraphError(ValueError):
    """Invalid hypergraph construction or an operation's precondition failed."""


class ParseError(HypergraphError):
    pass


class IndependenceUndefined(HypergraphError):
    """Raised when an empty edge makes every vertex set dependent."""


class GuardExceeded(HypergraphError):
    """An exponential search was asked to run on an instance above its guard."""


LABEL_RE = re.compile(r"^[A-Za-z0-9_.-]+$")
_DIGITS = re.compile(r"(\d+)")


def label_key(label: str):
    """Natural sort key, so ``v2`` sorts before ``v10``."""
    return tuple(
        (0, int(part), part) if part.isdigit() else (1, 0, part)
        for part in _DIGITS.split(label)
        if part
    )


def popcount(mask: int) -> int:
    return mask.bit_count()


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


class VertexSet:
    """Immutable set of vertex indices of a hypergraph of order ``n``."""

    __slots__ = ("mask", "n")

    def __init__(self, mask: int, n: int):
        if mask < 0 or mask >> n:
            raise HypergraphError(f"mask {mask:#x} has members outside 0..{n - 1}")
        self.mask = mask
        self.n = n

    @classmethod
    def of(cls, n: int, items: Iterable[int]) -> "VertexSet":
        items = list(items)
        for i in items:
            if not 0 <= i < n:
                raise HypergraphError(f"vertex {i} out of range 0..{n - 1}")
        return cls(mask_of(items), n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _other(self, other) -> int:
        if isinstance(other, VertexSet):
            return other.mask
        return mask_of(other)

    def __or__(self, other) -> "VertexSet":
        return VertexSet(self.mask | self._other(other), self.n)

    def __and__(self, other) -> "VertexSet":
        return VertexSet(self.mask & self._other(other), self.n)

    def __sub__(self, other) -> "VertexSet":
        return VertexSet(self.mask & ~self._other(other), self.n)

    def __le__(self, other) -> bool:
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other) -> bool:
        return self._other(other) & ~self.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.mask, self.n)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask and self.n == other.n
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mask, self.n))

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)}, n={self.n})"

    def to_list(self) -> list[int]:
        return list(self)


VertexLike = Union[VertexSet, Iterable[int], Iterable[str], int]


@dataclass(frozen=True)
class StructuralProfile:
    is_simple: bool
    is_linear: bool
    uniform_k: int | None
    isolated_vertices: VertexSet
    effective_edge_count: int
    component_partition: tuple[VertexSet, ...]


@dataclass(frozen=True)
class SolveResult:
    """Optimal value, a witness for it, and search statistics.

    ``witness`` is a :class:`~hyperburn.burning.Schedule` for the round-based
    game and a :class:`VertexSet` for the lazy game.
    """

    value: int
    witness: object
    nodes_explored: int
    bounds_used: tuple[int, int]


class Hypergraph:
    """Finite hypergraph with an ordered multiset of edges.

    Edges are stored in canonical order: members ascending, edge list sorted
    lexicographically so parallel edges sit next to each other. Edge indices
    used elsewhere (``strong_sub``) refer to this order.
    """

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Iterable[int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if vertex_count < 1:
            raise HypergraphError("a hypergraph needs at least one vertex")
        canon = []
        for edge in edges:
            members = list(edge)
            if len(set(members)) != len(members):
                raise HypergraphError(f"edge {members} repeats a vertex")
            for v in members:
                if not 0 <= v < vertex_count:
                    raise HypergraphError(
                        f"edge member {v} out of range 0..{vertex_count - 1}"
                    )
            canon.append(tuple(sorted(members)))
        canon.sort()
        if labels is None:
            labels = [str(i) for i in range(vertex_count)]
        labels = tuple(labels)
        if len(labels) != vertex_count:
            raise HypergraphError("label table length differs from vertex count")
        if len(set(labels)) != vertex_count:
            raise HypergraphError("vertex labels must be unique")
        for lab in labels:
            if not LABEL_RE.match(lab):
                raise HypergraphError(f"bad vertex label {lab!r}")
        self.n = vertex_count
        self.edges: tuple[tuple[int, ...], ...] = tuple(canon)
        self.labels: tuple[str, ...] = labels

    @property
    def vertex_count(self) -> int:
        return self.n

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def active_edges(self) -> tuple[int, ...]:
        """Distinct non-singleton edge masks: the only edges that propagate fire."""
        return tuple(dict.fromkeys(m for m in self.edge_masks if m.bit_count() >= 2))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    # -- labels ---------------------------------------------------------------

    def vertex(self, v: int | str) -> int:
        """Resolve a label or an index to an index."""
        if isinstance(v, str):
            try:
                return self.index_of[v]
            except KeyError:
                raise HypergraphError(f"unknown vertex label {v!r}") from None
        if not 0 <= v < self.n:
            raise HypergraphError(f"vertex {v} out of range 0..{self.n - 1}")
        return v

    def vset(self, items: VertexLike) -> VertexSet:
        """Coerce labels, indices or a VertexSet to a VertexSet of this graph."""
        if isinstance(items, VertexSet):
            if items.n != self.n:
                raise HypergraphError("vertex set belongs to a different hypergraph")
            return items
        if isinstance(items, int):
            return VertexSet(items, self.n)
        return VertexSet(mask_of(self.vertex(v) for v in items), self.n)

    def names(self, vs: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vs]

    # -- structure ------------------------------------------------------------

    @cached_property
    def degree_mask(self) -> int:
        """Vertices lying in at least one (possibly singleton) edge."""
        m = 0
        for e in self.edge_masks:
            m |= e
        return m

    @cached_property
    def isolated_mask(self) -> int:
        return self.full_mask & ~self.degree_mask

    @cached_property
    def inert_mask(self) -> int:
        """Vertices in no non-singleton edge; propagation can never reach them."""
        m = 0
        for e in self.active_edges:
            m |= e
        return self.full_mask & ~m

    @property
    def has_isolated(self) -> bool:
        return self.isolated_mask != 0

    @property
    def has_inert(self) -> bool:
        """Some vertex lies in no edge of size >= 2 (isolated ones included)."""
        return self.inert_mask != 0

    @property
    def has_singleton_or_empty(self) -> bool:
        return any(len(e) <= 1 for e in self.edges)

    @property
    def has_empty_edge(self) -> bool:
        return any(len(e) == 0 for e in self.edges)

    @property
    def is_simple(self) -> bool:
        if self.has_singleton_or_empty:
            return False
        return all(a != b for a, b in zip(self.edges, self.edges[1:]))

    @property
    def is_linear(self) -> bool:
        masks = self.edge_masks
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                if (masks[i] & masks[j]).bit_count() > 1:
                    return False
        return True

    @property
    def uniform_k(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def multiplicity(self, edge: Iterable[int]) -> int:
        key = tuple(sorted(edge))
        return sum(1 for e in self.edges if e == key)

    def profile(self) -> StructuralProfile:
        return StructuralProfile(
            is_simple=self.is_simple,
            is_linear=self.is_linear,
            uniform_k=self.uniform_k,
            isolated_vertices=VertexSet(self.isolated_mask, self.n),
            effective_edge_count=effective_edge_count(self),
            component_partition=tuple(
                VertexSet(m, self.n) for m in component_masks(self)
            ),
        )

    # -- propagation primitive ------------------------------------------------

    def spread(self, burned: int) -> int:
        """Vertices outside ``burned`` ignited by one propagation step."""
        new = 0
        for e in self.active_edges:
            missing = e & ~burned
            if missing and not missing & (missing - 1):
                new |= missing
        return new

    def closure(self, burned: int) -> int:
        while True:
            new = self.spread(burned)
            if not new:
                return burned
            burned |= new

    # -- equality -------------------------------------------------------------

    def _structure(self):
        return (
            frozenset(self.labels),
            Counter(frozenset(self.labels[v] for v in e) for e in self.edges),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.n == other.n and self._structure() == other._structure()

    def __hash__(self) -> int:
        labels, edges = self._structure()
        return hash((self.n, labels, frozenset(edges.items())))

    def __repr__(self) -> str:
        shown = [
            "{" + ",".join(self.labels[v] for v in e) + "}" for e in self.edges[:8]
        ]
        more = ", ..." if len(self.edges) > 8 else ""
        return f"Hypergraph(n={self.n}, edges=[{', '.join(shown)}{more}])"


# ---------------------------------------------------------------------------
# text format


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the line-oriented ``v``/``e`` format.

    Indices are assigned in order of first appearance.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[list[int]] = []

    def intern(label: str, lineno: int) -> int:
        if not LABEL_RE.match(label):
            raise ParseError(f"line {lineno}: bad label {label!r}")
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "v":
            if len(rest) != 1:
                raise ParseError(f"line {lineno}: 'v' takes exactly one label")
            intern(rest[0], lineno)
        elif head == "e":
            if len(set(rest)) != len(rest):
                raise ParseError(f"line {lineno}: repeated label within an edge")
            edges.append([intern(lab, lineno) for lab in rest])
        else:
            raise ParseError(f"line {lineno}: unknown directive {head!r}")
    if not labels:
        raise ParseError("hypergraph has no vertices")
    return Hypergraph(len(labels), edges, labels)


def serialize_hypergraph(H: Hypergraph) -> str:
    keyed = sorted(H.labels, key=label_key)
    lines = [f"v {lab}" for lab in keyed]
    edge_lines = sorted(
        (sorted((H.labels[v] for v in e), key=label_key) for e in H.edges),
        key=lambda labs: [label_key(x) for x in labs],
    )
    lines += [" ".join(["e", *labs]) for labs in edge_lines]
    return "\n".join(lines) + "\n"


def read_hypergraph(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(H: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_hypergraph(H))


# ---------------------------------------------------------------------------
# structural queries


def effective_edge_count(H: Hypergraph) -> int:
    """Number of edges that are not empty, singleton, or a duplicate."""
    return len(H.active_edges)


def component_masks(H: Hypergraph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest member."""
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        for v in e[1:]:
            a, b = find(e[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, int] = {}
    for v in range(H.n):
        r = find(v)
        groups[r] = groups.get(r, 0) | (1 << v)
    return [groups[r] for r in sorted(groups)]


def is_connected(H: Hypergraph) -> bool:
    return len(component_masks(H)) == 1


def _restrict(H: Hypergraph, keep: int, edges: Iterable[int]) -> Hypergraph:
    """Build the hypergraph on ``keep`` with the given edge masks, reindexed."""
    order = list(iter_bits(keep))
    new_index = {v: i for i, v in enumerate(order)}
    new_edges = [[new_index[v] for v in iter_bits(e)] for e in edges]
    return Hypergraph(len(order), new_edges, [H.labels[v] for v in order])


def connected_components(H: Hypergraph) -> list[Hypergraph]:
    """Components as strong induced subhypergraphs.

    Empty edges belong to no component; they are attached to the first one so
    the union of the components still carries every edge of ``H``.
    """
    comps = component_masks(H)
    out = []
    for i, cm in enumerate(comps):
        edges = [e for e in H.edge_masks if e and e & ~cm == 0]
        if i == 0:
            edges += [0] * sum(1 for e in H.edge_masks if not e)
        out.append(_restrict(H, cm, edges))
    return out


def two_section(H: Hypergraph) -> Hypergraph:
    pairs = set()
    for e in H.edges:
        for i, u in enumerate(e):
            for v in e[i + 1 :]:
                pairs.add((u, v))
    return Hypergraph(H.n, sorted(pairs), H.labels)


def is_independent(H: Hypergraph, S: VertexLike) -> bool:
    s = H.vset(S).mask
    return not any(e & ~s == 0 for e in H.edge_masks)


def max_independent_set(H: Hypergraph) -> VertexSet:
    """Largest vertex set containing no whole edge (singleton edges included).

    Exhaustive include/exclude search in ascending vertex order with the bound
    ``current + remaining <= best``; the first maximum found is the
    lexicographically smallest one.
    """
    if H.has_empty_edge:
        raise IndependenceUndefined(
            "an empty edge lies inside every vertex set; independence is undefined"
        )
    n = H.n
    # vertex v can join S only if no edge e with v == max(e) is covered by S + v;
    # edges are checked when their largest member is decided
    closing: list[list[int]] = [[] for _ in range(n)]
    for e in H.edges:
        closing[e[-1]].append(mask_of(e))
    best_mask = 0
    best_size = -1

    def search(v: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if size + (n - v) <= best_size:
            return
        if v == n:
            best_mask, best_size = chosen, size
            return
        with_v = chosen | 1 << v
        if all(e & ~with_v for e in closing[v]):
            search(v + 1, with_v, size + 1)
        search(v + 1, chosen, size)

    search(0, 0, 0)
    return VertexSet(best_mask, n)


def independence_number(H: Hypergraph) -> int:
    return len(max_independent_set(H))


# ---------------------------------------------------------------------------
# subhypergraphs


def weak_induced_sub(H: Hypergraph, W: VertexLike) -> Hypergraph:
    """``(W, {e & W : e in E(H), e & W nonempty})``, one edge per original edge."""
    w = H.vset(W).mask
    if not w:
        raise HypergraphError("weak induced subhypergraph needs a nonempty vertex set")
    return _restrict(H, w, [e & w for e in H.edge_masks if e & w])


def strong_sub(H: Hypergraph, W: VertexLike, F: Iterable[int]) -> Hypergraph:
    """``(W, selected edges)``; ``F`` holds edge indices in canonical order."""
    w = H.vset(W).mask
    if not w:
        raise HypergraphError("strong subhypergraph needs a nonempty vertex set")
    chosen = []
    for i in F:
        if not 0 <= i < len(H.edges):
            raise HypergraphError(f"edge index {i} out of range")
        e = H.edge_masks[i]
        if e & ~w:
            raise HypergraphError(f"edge {H.names(H.edges[i])} is not inside W")
        chosen.append(e)
    return _restrict(H, w, chosen)


def strong_induced_sub(H: Hypergraph, W: VertexLike) -> Hypergraph:
    """``H[W]``: every edge of ``H`` contained in ``W``."""
    w = H.vset(W).mask
    if not w:
        raise HypergraphError("induced subhypergraph needs a nonempty vertex set")
    return _restrict(H, w, [e for e in H.edge_masks if e & ~w == 0])


def edge_index(H: Hypergraph, edge: Iterable[int | str]) -> int:
    """Canonical index of the first edge equal to ``edge``."""
    key = tuple(sorted(H.vertex(v) for v in edge))
    try:
        return H.edges.index(key)
    except ValueError:
        raise HypergraphError(f"no edge {sorted(map(str, edge))}") from None
