from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hyperburn import (
    GuardExceeded,
    Hypergraph,
    HypergraphError,
    burning_number_exact,
    effective_edge_count,
    is_lazy_burning_set,
    lazy_burning_number_exact,
    lazy_closure,
    lazy_set_from_sequence,
    parse_hypergraph,
    run_schedule,
)
from hyperburn import gallery
from hyperburn.families import (
    gen_loose_path,
    gen_nested_family,
    gen_star_family,
    gen_strwk_family,
    gen_tight_path,
)
from hyperburn.core import weak_induced_sub
from strategies import hypergraph_and_subset, hypergraphs

FIG1 = "v x\nv y\nv z\nv w\ne x z w\n"


# -- closure ------------------------------------------------------------------


def test_closure_reaches_fourth_vertex():
    H = parse_hypergraph(FIG1)
    run = lazy_closure(H, ["x", "y", "z"])
    assert run.complete
    assert [H.names(s) for _, s in run.steps] == [["w"]]


def test_empty_seed_set_burns_nothing():
    run = lazy_closure(gen_tight_path(3, 5), [])
    assert not run.closure and run.steps == ()


def test_seed_spreads_one_step_each_way():
    H = gen_tight_path(3, 7)
    run = lazy_closure(H, ["v3", "v4"])
    assert run.complete
    assert [H.names(s) for _, s in run.steps] == [["v2", "v5"], ["v1", "v6"], ["v7"]]


@given(hypergraph_and_subset(max_n=10))
def test_closure_run_invariants(pair):
    H, S = pair
    run = lazy_closure(H, S)
    assert run.initial <= run.closure
    seen = run.initial
    for t, new in run.steps:
        assert new and not (new & seen)
        seen = seen | new
    assert seen == run.closure
    assert set(run.closure) == oracles.closure(H.n, oracles.edges_of(H), S)


# -- lazy burning sets --------------------------------------------------------


def test_single_vertex_lazily_burns_nested_family():
    H = gen_nested_family(4)
    assert is_lazy_burning_set(H, ["v1"])


def test_isolated_vertex_must_be_seeded():
    assert not is_lazy_burning_set(parse_hypergraph(FIG1), ["x", "z"])


@given(hypergraphs(max_n=8))
def test_whole_vertex_set_is_lazy_burning_set(H):
    assert is_lazy_burning_set(H, range(H.n))


# -- exact solver -------------------------------------------------------------


@pytest.mark.parametrize(
    "H, bl",
    [
        (parse_hypergraph(FIG1), 3),
        (gen_star_family(6), 2),
        (weak_induced_sub(gen_strwk_family(6), ["v3", "v4", "v5"]), 2),
        (gen_nested_family(5), 1),
        (gallery.nested_suffixes(), 2),
    ],
)
def test_exact_lazy_numbers(H, bl):
    res = lazy_burning_number_exact(H)
    assert res.value == bl
    assert len(res.witness) == bl and is_lazy_burning_set(H, res.witness)


def test_triple_witness_is_first_minimum():
    H = parse_hypergraph(FIG1)
    assert set(H.names(lazy_burning_number_exact(H).witness)) == {"x", "y", "z"}


@pytest.mark.parametrize("n", range(3, 23))
def test_tight_paths_have_lazy_number_two(n):
    assert lazy_burning_number_exact(gen_tight_path(3, n)).value == 2


def test_lazy_guard():
    with pytest.raises(GuardExceeded):
        lazy_burning_number_exact(gen_tight_path(3, 23))
    assert lazy_burning_number_exact(gen_tight_path(3, 23), max_vertices=23).value == 2


@settings(max_examples=200)
@given(hypergraphs(max_n=10, max_edges=8))
def test_lazy_solver_matches_subset_enumeration(H):
    res = lazy_burning_number_exact(H)
    assert res.value == oracles.lazy_burning_number(H)
    # lexicographically first minimum set
    first = next(
        c for c in combinations(range(H.n), res.value) if is_lazy_burning_set(H, c)
    )
    assert tuple(res.witness) == first


@given(hypergraphs(max_n=10))
def test_lazy_witness_contains_no_whole_propagating_edge(H):
    w = set(lazy_burning_number_exact(H).witness)
    assert not any(len(e) >= 2 and set(e) <= w for e in H.edges)


@given(hypergraphs(max_n=8))
def test_lazy_lower_bound(H):
    assert H.n - effective_edge_count(H) <= lazy_burning_number_exact(H).value


# -- sequence to lazy set -----------------------------------------------------


def test_triple_schedule_prefix():
    H = parse_hypergraph("e a b c\n")
    assert H.names(lazy_set_from_sequence(H, ["a", "b", "c"])) == ["a", "b"]


def test_two_path_schedule_prefix():
    H = gallery.two_tight_paths()
    S = lazy_set_from_sequence(H, run_schedule(H, ["3", "4", "9", "10", "7"]))
    assert H.names(S) == ["3", "4", "9", "10"]


@pytest.mark.parametrize("k, m", [(3, 1), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_loose_path_prefix_is_minimum(k, m):
    H = gen_loose_path(k, m)
    res = burning_number_exact(H)
    S = lazy_set_from_sequence(H, res.witness)
    assert len(S) == lazy_burning_number_exact(H).value


def test_prefix_rejects_incomplete_schedule():
    H = gen_tight_path(3, 5)
    with pytest.raises(HypergraphError):
        lazy_set_from_sequence(H, ["v1", "v2"])


def test_prefix_rejects_isolated_last_source():
    H = parse_hypergraph(FIG1)
    with pytest.raises(HypergraphError):
        lazy_set_from_sequence(H, ["x", "z", "y"])


def test_prefix_rejects_singleton_only_last_source():
    H = parse_hypergraph("e a\ne b c\n")
    with pytest.raises(HypergraphError):
        lazy_set_from_sequence(H, ["b", "c", "a"])


@given(hypergraphs(max_n=8))
def test_optimal_prefix_is_lazy_set(H):
    res = burning_number_exact(H)
    last = res.witness.sources[-1]
    if H.inert_mask >> last & 1:
        return
    S = lazy_set_from_sequence(H, res.witness)
    assert len(S) == res.value - 1


# -- closure laws -------------------------------------------------------------


@given(hypergraph_and_subset(max_n=12), st.data())
def test_closure_monotone_and_idempotent(pair, data):
    H, S = pair
    extra = data.draw(st.sets(st.integers(0, H.n - 1)))
    T = sorted(set(S) | extra)
    cS, cT = lazy_closure(H, S).closure, lazy_closure(H, T).closure
    assert cS <= cT
    assert lazy_closure(H, cS).closure == cS


@given(hypergraph_and_subset(max_n=12))
def test_degenerate_edges_do_not_matter(pair):
    H, S = pair
    stripped = Hypergraph(H.n, [e for e in H.edges if len(e) >= 2])
    assert set(lazy_closure(H, S).closure) == set(lazy_closure(stripped, S).closure)
