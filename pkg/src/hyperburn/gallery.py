"""Small hand-built instances that pin down tightness and strictness cases."""
from __future__ import annotations

from .core import parse_hypergraph


def triple_plus_isolated():
    """One 3-edge ``{x, z, w}`` and an isolated vertex ``y``."""
    return parse_hypergraph("v x\nv y\nv z\nv w\ne x z w\n")


def two_tight_paths():
    """Tight 3-paths on ``1..6`` and ``7..11``."""
    lines = [f"v {i}" for i in range(1, 12)]
    lines += [f"e {i} {i + 1} {i + 2}" for i in range(1, 5)]
    lines += [f"e {i} {i + 1} {i + 2}" for i in range(7, 10)]
    return parse_hypergraph("\n".join(lines) + "\n")


def path_edge_pair():
    """Tight 3-path on ten vertices, a disjoint 3-edge and a disjoint 2-edge.

    The path vertices are ``p1..p4, u1, u2, p7..p10`` in path order; the
    3-edge is ``{t1, u3, u4}`` and the 2-edge ``{u5, u6}``.
    """
    path = ["p1", "p2", "p3", "p4", "u1", "u2", "p7", "p8", "p9", "p10"]
    lines = [f"v {lab}" for lab in path + ["t1", "u3", "u4", "u5", "u6"]]
    lines += [f"e {path[i]} {path[i + 1]} {path[i + 2]}" for i in range(8)]
    lines += ["e t1 u3 u4", "e u5 u6"]
    return parse_hypergraph("\n".join(lines) + "\n")


def three_triples():
    """Edges ``{u3,u4,u5}, {u2,u3,u4}, {u1,u2,u5}``.

    Restricting to ``u2..u5`` gives the same numbers for the strong and the
    weak induced subhypergraph.
    """
    return parse_hypergraph(
        "v u1\nv u2\nv u3\nv u4\nv u5\ne u3 u4 u5\ne u2 u3 u4\ne u1 u2 u5\n"
    )


def overlapping_triples():
    """Edges ``{u1,u2,u3}, {u2,u3,u4}``; weak restriction to ``u1..u3`` burns faster."""
    return parse_hypergraph("v u1\nv u2\nv u3\nv u4\ne u1 u2 u3\ne u2 u3 u4\n")


def star_with_rim():
    """``K_{1,3}`` centred at ``u1`` plus the rim edge ``{u2, u3, u4}``."""
    return parse_hypergraph("e u1 u2\ne u1 u3\ne u1 u4\ne u2 u3 u4\n")


def nested_suffixes():
    """Edges ``{u1..u6}, {u3..u6}, {u4,u5,u6}, {u5,u6}``."""
    return parse_hypergraph(
        "v u1\nv u2\nv u3\nv u4\nv u5\nv u6\n"
        "e u1 u2 u3 u4 u5 u6\ne u3 u4 u5 u6\ne u4 u5 u6\ne u5 u6\n"
    )


def big_edge_with_tail():
    """Edge ``{u1..u6}`` with ``{u6,u7,u8}`` and ``{u6,u7}`` hanging off ``u6``."""
    return parse_hypergraph(
        "v u1\nv u2\nv u3\nv u4\nv u5\nv u6\nv u7\nv u8\n"
        "e u1 u2 u3 u4 u5 u6\ne u6 u7 u8\ne u6 u7\n"
    )
