import pytest

from cutmin import cmcomplex as CM
from cutmin.cochains import Cochain, cochain_to_graph, graph_to_cochain
from cutmin.errors import InfeasibleSizeError
from cutmin.graphs import is_cut_minimal

from oracles import all_graphs, cut_minimal_brute


@pytest.mark.parametrize(
    "n, f",
    [(3, [3]), (4, [6, 3]), (5, [10, 45, 100, 10]), (6, [15, 105, 395, 735, 132, 10])],
)
def test_f_vectors(n, f):
    assert CM.f_vector(n).f_vector == f


def test_betti_small():
    assert CM.betti_gf2(3) == [3]
    assert CM.betti_gf2(4) == [3, 0]
    assert CM.betti_gf2(5) == [1, 0, 54, 0]
    assert CM.maximal_faces(5) == [0, 0, 60, 10]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_euler_characteristic(n):
    s = CM.summary(n, betti=True)
    assert s.euler_characteristic == sum((-1) ** d * b for d, b in enumerate(s.betti_gf2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_faces_are_exactly_cut_minimal_graphs(n):
    faces = {f for layer in CM.enumerate_faces(n) for f in layer}
    expected = {
        graph_to_cochain(g).support for g in all_graphs(n) if g.edge_count and cut_minimal_brute(g)
    }
    assert faces == expected


def test_faces_cut_minimal_n6():
    for layer in CM.enumerate_faces(6):
        for f in layer[::7]:
            assert is_cut_minimal(cochain_to_graph(Cochain(6, 1, f)))


def test_summary_json():
    out = CM.summary(5, betti=True, maximal=True).to_json()
    assert out == {
        "n": 5,
        "dim": 3,
        "f_vector": [10, 45, 100, 10],
        "num_maximal_faces_by_dim": [0, 0, 60, 10],
        "betti_gf2": [1, 0, 54, 0],
    }


def test_caps():
    with pytest.raises(InfeasibleSizeError):
        CM.f_vector(8)
    with pytest.raises(InfeasibleSizeError):
        CM.betti_gf2(7)
    with pytest.raises(ValueError):
        CM.f_vector(1)
