from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cutmin import partitions as P
from cutmin.errors import InfeasibleSizeError
from cutmin.graphs import (
    Graph,
    blowup_graph,
    canonical_form,
    canonical_graph,
    check_cut_minimal,
    complete_graph,
    count_odd_triangles,
    cut_report,
    cycle_graph,
    edge_weights,
    format_graph,
    h_graph,
    is_bipartite,
    is_cut_minimal,
    is_isomorphic,
    is_triangle_free,
    mw_certificate,
    parse_graph,
    permute,
    staircase,
    staircase_recognize,
    twin_classes,
)
from cutmin.partitions import Partition

from oracles import all_graphs, cut_minimal_brute, cut_minimal_numpy, h_by_triples, isomorphic_brute
from strategies import graphs, partitions


def two_edges() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


# --- basics ---------------------------------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, (0b010, 0b000, 0))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InfeasibleSizeError):
        Graph.empty(65)


def test_text_round_trip():
    g = staircase(8, (3, 3, 1))
    text = format_graph(g)
    assert text.splitlines()[0] == "8"
    assert parse_graph(text) == g
    assert parse_graph("\n3\n1 2\n") == Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        parse_graph("3\n2 1\n")
    with pytest.raises(ValueError):
        parse_graph("3\n1 4\n")


@given(graphs())
def test_text_round_trip_random(g):
    assert parse_graph(format_graph(g)) == g


def test_staircase_layout():
    g = staircase(6, (2, 2))
    assert g.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ValueError):
        staircase(3, (2, 2))


# --- cut-minimality -------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cut_minimal_exhaustive(n):
    for g in all_graphs(n):
        assert is_cut_minimal(g) == cut_minimal_brute(g), g.edges()


def test_cut_minimal_exhaustive_n6():
    agree = sum(is_cut_minimal(g) == cut_minimal_numpy(g) for g in all_graphs(6))
    assert agree == 1 << 15


@given(graphs(min_n=6, max_n=12))
def test_cut_minimal_random(g):
    assert is_cut_minimal(g) == cut_minimal_numpy(g)


@given(graphs(max_n=10))
def test_witness_violates(g):
    w = check_cut_minimal(g)
    if w is not None:
        assert w.edges_across > w.non_edges_across
        assert 2 * w.size <= g.n
        assert cut_report(g, w.cut_set) == w


def test_witness_smallest_side():
    # K4: the first violating cut is a single vertex with 3 edges vs 0 non-edges
    w = check_cut_minimal(complete_graph(4))
    assert w is not None and w.size == 1 and w.edges_across == 3 and w.non_edges_across == 0
    assert w.vertices() == [0]


@given(graphs(max_n=10))
def test_cut_minimal_valency_bound(g):
    if is_cut_minimal(g):
        assert all(2 * g.degree(v) <= g.n - 1 for v in range(g.n))


@given(graphs(max_n=9, min_edges=1), st.data())
def test_edge_deletion_keeps_cut_minimal(g, data):
    if not is_cut_minimal(g):
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    assert is_cut_minimal(g.remove_edge(u, v))


def test_twin_compression_handles_large_blowups():
    g = blowup_graph(staircase(8, (3, 3, 1)), 6)
    assert g.n == 48
    assert is_cut_minimal(g)
    assert len(twin_classes(g)) <= 8


def test_cut_state_cap():
    import random

    rng = random.Random(1)
    edges = [(u, v) for u in range(40) for v in range(u + 1, 40) if rng.random() < 0.1]
    g = Graph.from_edges(40, edges)
    with pytest.raises(InfeasibleSizeError):
        check_cut_minimal(g, max_states=1 << 10)


# --- h(G) -----------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_h_exhaustive(n):
    for g in all_graphs(n):
        if g.edge_count:
            assert h_graph(g) == h_by_triples(g)


@given(graphs(max_n=16, min_edges=1))
def test_h_random(g):
    assert h_graph(g) == h_by_triples(g)
    assert sum(edge_weights(g).values()) / g.edge_count == h_graph(g)


def test_h_examples():
    assert count_odd_triangles(complete_graph(3)) == 1
    assert h_graph(complete_graph(3)) == Fraction(1, 3)
    assert h_graph(Graph.from_edges(3, [(0, 1)])) == 1
    assert h_graph(staircase(8, (3, 3, 1))) == Fraction(20, 7)
    assert h_graph(cycle_graph(4)) == 0
    with pytest.raises(ValueError):
        h_graph(Graph.empty(4))


def test_staircase_h_bridge():
    for lam in P.partitions_up_to(12):
        assert h_graph(staircase(P.n_min(lam), lam)) == P.h_partition(lam), lam


def test_staircase_cut_minimal_at_n_min():
    for lam in P.partitions_up_to(12):
        m = P.n_min(lam)
        assert is_cut_minimal(staircase(m, lam)), lam
        if m - 1 >= P.box(lam):
            assert not is_cut_minimal(staircase(m - 1, lam)), lam


# --- structure ------------------------------------------------------------


def test_flags():
    assert is_triangle_free(cycle_graph(5)) and not is_bipartite(cycle_graph(5))
    assert is_bipartite(cycle_graph(6)) and not is_triangle_free(complete_graph(3))


def test_recognize_examples():
    assert staircase_recognize(staircase(8, (3, 3, 1))) == Partition((3, 3, 1))
    assert staircase_recognize(staircase(8, (3, 2, 2))) == Partition((3, 3, 1))
    assert staircase_recognize(Graph.from_edges(3, [(0, 1)])) == Partition((1,))
    assert staircase_recognize(cycle_graph(6)) is None
    assert staircase_recognize(two_edges()) is None
    assert staircase_recognize(Graph.empty(4)) is None
    assert staircase_recognize(cycle_graph(6, 5)) is None


@given(partitions(max_parts=5, max_part=5), st.integers(0, 3), st.data())
def test_recognize_permuted_staircase(lam, pad, data):
    n = P.box(lam) + pad
    perm = data.draw(st.permutations(list(range(n))))
    got = staircase_recognize(permute(staircase(n, lam), perm))
    assert got == max(lam, P.conjugate(lam), key=lambda p: p.parts)


# --- blowups --------------------------------------------------------------


@given(graphs(max_n=8, min_edges=1), st.integers(1, 4))
def test_blowup_scales_h(g, c):
    assert h_graph(blowup_graph(g, c)) == c * h_graph(g)


@given(graphs(max_n=7), st.integers(1, 3))
def test_blowup_keeps_cut_minimal(g, c):
    if is_cut_minimal(g):
        assert is_cut_minimal(blowup_graph(g, c))


@given(partitions(max_parts=4, max_part=4), st.integers(0, 2), st.integers(1, 4))
def test_blowup_of_staircase_is_staircase(lam, pad, c):
    n = P.box(lam) + pad
    assert blowup_graph(staircase(n, lam), c) == staircase(c * n, P.blowup(lam, c))


def test_blowup_errors():
    with pytest.raises(ValueError):
        blowup_graph(cycle_graph(4), 0)
    with pytest.raises(InfeasibleSizeError):
        blowup_graph(cycle_graph(20), 4)


# --- certificate ----------------------------------------------------------


@given(graphs(max_n=10))
def test_mw_total(g):
    cert = mw_certificate(g)
    assert cert.total == 3 * count_odd_triangles(g)
    assert len(cert.per_vertex) == g.n
    if is_cut_minimal(g):
        assert cert.holds


def test_mw_sharp_on_staircase():
    cert = mw_certificate(staircase(6, (2, 2)))
    assert cert.per_vertex == (4,) * 6 and cert.holds and cert.sharp


# --- canonical form -------------------------------------------------------


@given(graphs(max_n=10), st.data())
def test_canonical_invariant(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = permute(g, perm)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(h) == canonical_graph(g)
    assert is_isomorphic(g, canonical_graph(g))


@pytest.mark.parametrize("n, classes", [(3, 4), (4, 11), (5, 34), (6, 156)])
def test_canonical_class_counts(n, classes):
    assert len({canonical_form(g) for g in all_graphs(n)}) == classes


@given(graphs(min_n=5, max_n=6), graphs(min_n=5, max_n=6))
def test_canonical_separates(g, h):
    if g.n == h.n:
        assert (canonical_form(g) == canonical_form(h)) == isomorphic_brute(g, h)


def test_canonical_cap():
    with pytest.raises(InfeasibleSizeError):
        canonical_form(Graph.empty(11))
