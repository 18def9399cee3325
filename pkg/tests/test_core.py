import random
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from hyperburn import (
    Hypergraph,
    HypergraphError,
    IndependenceUndefined,
    ParseError,
    VertexSet,
    connected_components,
    edge_index,
    effective_edge_count,
    is_independent,
    max_independent_set,
    parse_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    strong_induced_sub,
    strong_sub,
    two_section,
    weak_induced_sub,
    write_hypergraph,
)
from hyperburn import gallery
from hyperburn.families import gen_single_edge, gen_star_family, gen_strwk_family, gen_tight_path
from strategies import hypergraph_and_subset, hypergraphs

FIG1 = "v x\nv y\nv z\nv w\ne x z w\n"


def edge_labels(H):
    return Counter(frozenset(H.labels[v] for v in e) for e in H.edges)


# -- parsing and serialization ------------------------------------------------


def test_parse_triple_with_isolated_vertex():
    H = parse_hypergraph(FIG1)
    assert H.n == 4
    assert edge_labels(H) == Counter({frozenset("xzw"): 1})


def test_parse_smallest_graph_edge():
    H = parse_hypergraph("e a b\n")
    assert H.n == 2 and H.edges == ((0, 1),)


@pytest.mark.parametrize(
    "text",
    ["e a a b\n", "x a b\n", "", "# only a comment\n", "v\n", "v a b\n", "e a b$\n"],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_hypergraph(text)


def test_parse_skips_comments_and_blank_lines():
    H = parse_hypergraph("# header\n\nv q\n  \n   # indented comment\ne a b\n")
    assert H.labels == ("q", "a", "b")


def test_parse_empty_and_singleton_edges():
    H = parse_hypergraph("v a\ne\ne a\n")
    assert H.edges == ((), (0,))
    assert H.has_empty_edge and H.has_singleton_or_empty


def test_serialize_vertex_lines_then_edge_lines():
    out = serialize_hypergraph(parse_hypergraph(FIG1))
    assert out == "v w\nv x\nv y\nv z\ne w x z\n"


def test_serialize_keeps_parallel_edges_adjacent():
    out = serialize_hypergraph(parse_hypergraph("e a b\ne c\ne a b\n"))
    assert out.splitlines()[3:] == ["e a b", "e a b", "e c"]


def test_serialize_empty_edge():
    assert "e\n" in serialize_hypergraph(parse_hypergraph("v a\ne\n"))


def test_serialize_natural_label_order():
    out = serialize_hypergraph(gen_tight_path(2, 11))
    assert out.splitlines()[:3] == ["v v1", "v v2", "v v3"]
    assert out.splitlines()[-1] == "e v10 v11"


@given(hypergraphs(max_n=8))
def test_serialize_round_trip(H):
    assert parse_hypergraph(serialize_hypergraph(H)) == H


@given(hypergraphs(max_n=8), st.randoms(use_true_random=False))
def test_serialize_is_independent_of_input_order(H, rnd):
    text = serialize_hypergraph(H)
    lines = text.splitlines()
    rnd.shuffle(lines)
    assert serialize_hypergraph(parse_hypergraph("\n".join(lines))) == text


def test_file_round_trip(tmp_path):
    H = gallery.path_edge_pair()
    path = tmp_path / "h.hg"
    write_hypergraph(H, path)
    assert read_hypergraph(path) == H


# -- construction -------------------------------------------------------------


@pytest.mark.parametrize(
    "n, edges, labels",
    [
        (0, [], None),
        (3, [(0, 0)], None),
        (3, [(0, 3)], None),
        (2, [], ["a"]),
        (2, [], ["a", "a"]),
        (2, [], ["a", "b c"]),
    ],
)
def test_construction_errors(n, edges, labels):
    with pytest.raises(HypergraphError):
        Hypergraph(n, edges, labels)


def test_edges_are_canonical():
    H = Hypergraph(4, [(3, 1), (2, 0, 1), (1, 3)])
    assert H.edges == ((0, 1, 2), (1, 3), (1, 3))
    assert H.multiplicity([3, 1]) == 2


def test_vertex_lookup():
    H = parse_hypergraph(FIG1)
    assert H.vertex("z") == 2 and H.vertex(2) == 2
    with pytest.raises(HypergraphError):
        H.vertex("nope")
    with pytest.raises(HypergraphError):
        H.vertex(9)


def test_profile_of_tight_path():
    p = gen_tight_path(3, 6).profile()
    assert p.is_simple and not p.is_linear and p.uniform_k == 3
    assert p.effective_edge_count == 4
    assert not p.isolated_vertices
    assert len(p.component_partition) == 1


def test_profile_flags_isolated_vertex():
    p = parse_hypergraph(FIG1).profile()
    assert p.isolated_vertices == {1}
    assert len(p.component_partition) == 2


def test_vertex_set_operations():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 4])
    assert a | b == {0, 2, 4}
    assert a & b == {2}
    assert a - b == {0}
    assert a.complement() == {1, 3, 4}
    assert VertexSet.of(5, [2]) <= a and a >= [2]
    assert 4 not in a and len(VertexSet.full(5)) == 5
    with pytest.raises(HypergraphError):
        VertexSet.of(5, [5])


# -- effective edge count -----------------------------------------------------


def test_effective_edges_single_triple():
    assert effective_edge_count(parse_hypergraph(FIG1)) == 1


def test_effective_edges_discard_degenerate():
    H = parse_hypergraph("e a b\ne a b\ne c\ne\n")
    assert effective_edge_count(H) == 1


@pytest.mark.parametrize("n", range(3, 12))
def test_effective_edges_tight_path(n):
    assert effective_edge_count(gen_tight_path(3, n)) == n - 2


@given(hypergraphs(max_n=8))
def test_effective_edges_at_most_edge_count(H):
    clean = all(len(e) >= 2 for e in H.edges) and len(set(H.edges)) == len(H.edges)
    assert effective_edge_count(H) <= len(H.edges)
    assert (effective_edge_count(H) == len(H.edges)) == clean
    if H.is_simple:
        assert effective_edge_count(H) == len(H.edges)


# -- components ---------------------------------------------------------------


def test_components_of_two_tight_paths():
    assert [G.n for G in connected_components(gallery.two_tight_paths())] == [6, 5]


def test_connected_hypergraph_is_its_own_component():
    H = gen_tight_path(3, 7)
    assert connected_components(H) == [H]


def test_components_of_path_and_two_edges():
    assert [G.n for G in connected_components(gallery.path_edge_pair())] == [10, 3, 2]


@given(hypergraphs(max_n=8))
def test_components_match_search_oracle(H):
    comps = connected_components(H)
    got = {frozenset(G.labels) for G in comps}
    want = {frozenset(H.labels[v] for v in c) for c in oracles.components(H)}
    assert got == want
    assert sum(len(G.edges) for G in comps) == len(H.edges)


# -- 2-section ----------------------------------------------------------------


def test_two_section_of_triple_is_triangle():
    G = two_section(Hypergraph(3, [(0, 1, 2)]))
    assert G.edges == ((0, 1), (0, 2), (1, 2))


def test_two_section_deduplicates_graph():
    G = two_section(Hypergraph(3, [(0, 1), (0, 1), (1, 2)]))
    assert G.edges == ((0, 1), (1, 2))


def test_two_section_of_tight_path():
    G = two_section(gen_tight_path(3, 5))
    want = {(i, i + 1) for i in range(4)} | {(i, i + 2) for i in range(3)}
    assert set(G.edges) == want


@given(hypergraphs(max_n=7))
def test_two_section_is_idempotent(H):
    G = two_section(H)
    assert two_section(G) == G
    assert all(len(e) == 2 for e in G.edges) and G.is_simple


# -- independence -------------------------------------------------------------


def test_mis_triple_with_isolated_vertex():
    H = parse_hypergraph(FIG1)
    assert set(H.names(max_independent_set(H))) == {"x", "y", "z"}


def test_mis_star_family():
    assert len(max_independent_set(gen_star_family(6))) == 5


def test_mis_single_edge():
    assert len(max_independent_set(gen_single_edge(8))) == 7


def test_mis_empty_edge_is_undefined():
    with pytest.raises(IndependenceUndefined):
        max_independent_set(parse_hypergraph("v a\ne\n"))


def test_mis_avoids_singleton_edge_vertex():
    H = parse_hypergraph("e a\ne a b\n")
    assert H.names(max_independent_set(H)) == ["b"]


@given(hypergraphs(max_n=9))
def test_mis_is_maximum_and_lexicographically_first(H):
    if H.has_empty_edge:
        return
    S = max_independent_set(H)
    assert is_independent(H, S)
    assert len(S) == oracles.independence_number(H)
    # maximality certificate: every outside vertex completes some edge
    for v in range(H.n):
        if v not in S:
            assert not is_independent(H, S | [v])
    best = next(
        c for c in combinations(range(H.n), len(S)) if is_independent(H, list(c))
    )
    assert list(S) == list(best)


# -- subhypergraphs -----------------------------------------------------------


def test_weak_restriction_of_strwk_family():
    H = gen_strwk_family(6)
    G = weak_induced_sub(H, ["v3", "v4", "v5"])
    assert edge_labels(G) == Counter(
        {frozenset({"v3"}): 1, frozenset({"v4"}): 1, frozenset({"v5"}): 1,
         frozenset({"v3", "v4", "v5"}): 1}
    )


def test_weak_restriction_of_three_triples_adds_pair():
    G = weak_induced_sub(gallery.three_triples(), ["u2", "u3", "u4", "u5"])
    assert edge_labels(G)[frozenset({"u2", "u5"})] == 1


def test_strong_sub_single_big_edge():
    H = gen_strwk_family(6)
    W = ["v3", "v4", "v5", "v6"]
    G = strong_sub(H, W, [edge_index(H, W)])
    assert G.n == 4 and G.edges == ((0, 1, 2, 3),)


def test_strong_sub_tail_edge():
    H = gallery.big_edge_with_tail()
    G = strong_sub(H, ["u6", "u7", "u8"], [edge_index(H, ["u6", "u7", "u8"])])
    assert edge_labels(G) == Counter({frozenset({"u6", "u7", "u8"}): 1})


def test_strong_sub_rejects_edge_outside_w():
    H = gallery.big_edge_with_tail()
    with pytest.raises(HypergraphError):
        strong_sub(H, ["u6", "u7"], [edge_index(H, ["u6", "u7", "u8"])])


def test_induced_sub_of_rim():
    G = strong_induced_sub(gallery.star_with_rim(), ["u2", "u3", "u4"])
    assert G.n == 3 and G.edges == ((0, 1, 2),)


def test_induced_sub_of_tail():
    G = strong_induced_sub(gallery.big_edge_with_tail(), ["u6", "u7", "u8"])
    assert edge_labels(G) == Counter(
        {frozenset({"u6", "u7", "u8"}): 1, frozenset({"u6", "u7"}): 1}
    )


@pytest.mark.parametrize("op", [weak_induced_sub, strong_induced_sub])
def test_empty_vertex_set_rejected(op):
    with pytest.raises(HypergraphError):
        op(gen_tight_path(3, 4), [])


@given(hypergraphs(max_n=8))
def test_whole_vertex_set_is_identity(H):
    V = range(H.n)
    if not H.has_empty_edge:
        assert weak_induced_sub(H, V) == H
    assert strong_induced_sub(H, V) == H
    assert strong_sub(H, V, range(len(H.edges))) == H


def test_weak_restriction_drops_empty_edges():
    H = parse_hypergraph("e a b\ne\n")
    assert weak_induced_sub(H, ["a", "b"]).edges == ((0, 1),)
    assert strong_induced_sub(H, ["a", "b"]) == H


@given(hypergraph_and_subset(max_n=8), st.randoms(use_true_random=False))
def test_strong_sub_edges_appear_in_weak_restriction(pair, rnd):
    H, W = pair
    if not W or H.has_empty_edge:
        return
    inside = [i for i, e in enumerate(H.edges) if set(e) <= set(W)]
    F = [i for i in inside if rnd.random() < 0.5]
    strong = edge_labels(strong_sub(H, W, F))
    weak = edge_labels(weak_induced_sub(H, W))
    assert all(weak[e] >= c for e, c in strong.items())


def test_random_instances_are_hashable_and_equal_by_labels():
    rng = random.Random(3)
    H = Hypergraph(5, [rng.sample(range(5), 3) for _ in range(4)])
    assert hash(H) == hash(parse_hypergraph(serialize_hypergraph(H)))
