from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from cutmin import cochains as C
from cutmin.cochains import Cochain
from cutmin.errors import InfeasibleSizeError
from cutmin.graphs import Graph, canonical_form, h_graph, is_cut_minimal
from cutmin.search import cheeger_number

from oracles import all_graphs
from strategies import graphs


@pytest.mark.parametrize("n", range(2, 8))
def test_coboundary_squares_to_zero(n):
    for k in range(-1, n - 2):
        up = C.coboundary_columns(n, k + 1)
        for col in C.coboundary_columns(n, k):
            assert C.coboundary(Cochain(n, k + 1, col)).support == 0
        assert len(up) == comb(n, k + 2)


def test_colex_edge_order():
    pairs = C.simplices(5, 1)
    for i, (u, v) in enumerate(pairs):
        assert C.edge_index(u, v) == i == C.edge_index(v, u)
    assert pairs[:4] == ((0, 1), (0, 2), (1, 2), (0, 3))


def test_cochain_validation_and_json():
    with pytest.raises(ValueError):
        Cochain(4, 4, 0)
    with pytest.raises(ValueError):
        Cochain(4, 1, 1 << 6)
    c = Cochain.from_simplices(5, 1, [(0, 1), (3, 2)])
    assert c.simplices() == [(0, 1), (2, 3)]
    assert Cochain.from_json(c.to_json()) == c
    with pytest.raises(ValueError):
        c + Cochain(5, 0, 1)


@given(graphs(max_n=9))
def test_graph_cochain_round_trip(g):
    c = C.graph_to_cochain(g)
    assert c.norm == g.edge_count
    assert C.cochain_to_graph(c) == g


@given(graphs(min_n=3, max_n=9, min_edges=1))
def test_coboundary_counts_odd_triples(g):
    c = C.graph_to_cochain(g)
    assert Fraction(C.coboundary(c).norm, g.edge_count) == h_graph(g)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cut_minimal_iff_cosystole(n):
    for g in all_graphs(n):
        assert is_cut_minimal(g) == C.is_cosystole(C.graph_to_cochain(g)), g.edges()


@given(graphs(min_n=6, max_n=7))
def test_cut_minimal_iff_cosystole_random(g):
    assert is_cut_minimal(g) == C.is_cosystole(C.graph_to_cochain(g))


@given(graphs(min_n=4, max_n=7), st.integers(min_value=0))
def test_norm_is_coset_invariant(g, seed):
    c = C.graph_to_cochain(g)
    d = Cochain(g.n, 0, seed % (1 << g.n))
    shifted = c + C.coboundary(d)
    assert C.cosystolic_norm(shifted)[0] == C.cosystolic_norm(c)[0]
    assert C.is_coboundary(C.coboundary(d))


@given(graphs(min_n=3, max_n=7))
def test_norm_minimizer_is_consistent(g):
    c = C.graph_to_cochain(g)
    norm, d = C.cosystolic_norm(c)
    assert (c + C.coboundary(d)).norm == norm <= c.norm


@pytest.mark.parametrize("n", range(2, 9))
def test_vertex_set_coboundary(n):
    for s in range(1 << n):
        size = bin(s).count("1")
        assert C.coboundary(C.vertex_set_cochain(n, s)).norm == size * (n - size)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_h0_conventions(n):
    both = C.h0_both_conventions(n)
    assert both["augmented"] == (n + 1) // 2
    assert both["unaugmented"] == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_h1_matches_search(n):
    res = C.cheeger_constant(n, 1)
    rep = cheeger_number(n)
    assert res.value == rep.h_value
    assert sorted(canonical_form(C.cochain_to_graph(m)) for m in res.minimizers) == sorted(
        canonical_form(g) for g in rep.cheeger_graphs
    )


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_top_constant(n):
    # h_{n-2} of the simplex is 1
    assert C.cheeger_constant(n, n - 2).value == 1


@pytest.mark.parametrize("n", [4, 5, 6])
def test_penultimate_constant(n):
    res = C.cheeger_constant(n, n - 3)
    assert res.value == 2
    assert list(res.spectrum) == [Fraction(2)]


def test_spectrum_counts_cosystoles_n4():
    res = C.cheeger_constant(4, 1)
    cosystoles = sum(
        1 for g in all_graphs(4) if g.edge_count and C.is_cosystole(C.graph_to_cochain(g))
    )
    assert sum(res.spectrum.values()) == cosystoles


def test_expansion_rejects_coboundary():
    with pytest.raises(ValueError):
        C.expansion(C.coboundary(C.vertex_set_cochain(5, 0b11)))
    g = Graph.from_edges(5, [(0, 1)])
    assert C.expansion(C.graph_to_cochain(g)) == 3


def test_infeasible_sizes():
    with pytest.raises(InfeasibleSizeError):
        C.cheeger_constant(9, 1)
    with pytest.raises(ValueError):
        C.cheeger_constant(5, 4)
    with pytest.raises(ValueError):
        C.cosystolic_norm(Cochain(4, -1, 1))
