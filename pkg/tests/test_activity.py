"""Shelling, coherent cotree tables, In/B, activities, Tutte polynomials."""

import pytest

from ckskit import corpus
from ckskit.activity import (
    coherent_cotree,
    external_activity,
    h_polynomial,
    internal_activity,
    lex_shelling,
    tutte,
    tutte_by_activity,
)
from ckskit.errors import FaceNotInComplex
from ckskit.graphs import Graph, spanning_tree_count
from ckskit.polynomials import Poly1, Poly2

THETA = corpus.theta_graph()
X, Y, Z = 0, 1, 2


def fs(*edges):
    return frozenset(edges)


@pytest.fixture(scope="module")
def theta_cc():
    return coherent_cotree(THETA)


def test_shelling_order_and_restrictions():
    sh = lex_shelling(THETA)
    assert sh.cotrees == [fs(X, Y), fs(X, Z), fs(Y, Z)]
    assert sh.restriction == {fs(X, Y): fs(), fs(X, Z): fs(Z), fs(Y, Z): fs(Y, Z)}
    assert sh.new_faces(2) == {fs(Z), fs(X, Z)}
    assert sh.partial_complex(3) == sh.partial_complex(2) | {fs(Y, Z)}


def test_theta_cotree_table(theta_cc):
    expected = {
        fs(): fs(X, Y),
        fs(X): fs(Y),
        fs(Y): fs(X),
        fs(Z): fs(X),
        fs(X, Y): fs(),
        fs(X, Z): fs(),
        fs(Y, Z): fs(),
    }
    assert theta_cc.table == expected
    assert theta_cc.validate()


def test_theta_in_table_and_basis(theta_cc):
    expected_in = {
        fs(): fs(),
        fs(X): fs(X),
        fs(Y): fs(Y),
        fs(Z): fs(),
        fs(X, Y): fs(X, Y),
        fs(X, Z): fs(X),
        fs(Y, Z): fs(),
    }
    assert {s: theta_cc.in_set(s) for s in theta_cc.faces.faces()} == expected_in
    assert theta_cc.basis() == [fs(), fs(Z), fs(Y, Z)]
    assert [len(level) for level in theta_cc.basis_by_degree()] == [1, 1, 1]


def test_faces_only(theta_cc):
    with pytest.raises(FaceNotInComplex):
        theta_cc.C({X, Y, Z})
    with pytest.raises(FaceNotInComplex):
        theta_cc.in_set({X, Y, Z})


def test_activities_theta():
    # tree {z}: x and y are each minimal in their cycles {x,z} and {y,z};
    # tree {x}: both cycles contain x, which precedes y and z
    assert external_activity(THETA, fs(Z)) == fs(X, Y)
    assert external_activity(THETA, fs(X)) == fs()
    assert internal_activity(THETA, fs(X)) == fs(X)
    assert internal_activity(THETA, fs(Z)) == fs()


def test_in_of_top_faces_is_external_activity(theta_cc):
    for cotree in theta_cc.faces.levels[2]:
        assert theta_cc.in_set(cotree) == external_activity(THETA, THETA.eids - cotree)


def test_tutte_theta():
    t = tutte(THETA)
    assert t == Poly2({(1, 0): 1, (0, 1): 1, (0, 2): 1})
    assert str(t) == "x + y + y^2"
    assert tutte_by_activity(THETA) == t


def test_tutte_small_cases():
    assert tutte(corpus.loop_graph()) == Poly2({(0, 1): 1})
    assert tutte(corpus.bridge_graph()) == Poly2({(1, 0): 1})
    assert tutte(corpus.two_loops_graph()) == Poly2({(0, 2): 1})


def test_tutte_k4():
    t = tutte(corpus.k4_graph())
    assert t == tutte_by_activity(corpus.k4_graph())
    assert h_polynomial(corpus.k4_graph()) == Poly1({0: 6, 1: 6, 2: 3, 3: 1})
    assert t(1, 1) == 16 == spanning_tree_count(corpus.k4_graph())


def test_tutte_independent_of_edge_order():
    g = corpus.k4_graph()
    t = tutte(g)
    for order in ([5, 4, 3, 2, 1, 0], [2, 0, 5, 1, 4, 3], [1, 2, 3, 4, 5, 0]):
        g2 = Graph(g.vertices, g.head, g.tail, [g.order[i] for i in order])
        assert tutte_by_activity(g2) == t


def test_h_polynomial_theta():
    assert h_polynomial(THETA) == Poly1({0: 1, 1: 1, 2: 1})
    assert h_polynomial(THETA)(1) == spanning_tree_count(THETA) == 3
