"""Graph core: parsing, matroid queries, cycle bases, genericity."""

import pytest

from ckskit import corpus
from ckskit.errors import (
    BondDeletion,
    DisconnectedGraph,
    EmptyGraph,
    NotACotree,
    ParseError,
)
from ckskit.graphs import (
    CycleBasis,
    boundary_matrix,
    build_graph,
    contains_bond,
    enumerate_bonds,
    enumerate_cycles,
    face_complex,
    fundamental_cycle,
    graph_from_dsl,
    graph_from_json,
    graph_to_json,
    is_generic_character,
    is_spanning_cotree,
    is_spanning_tree,
    spanning_cotrees,
    spanning_tree_count,
    wedge,
)

THETA = corpus.theta_graph()
X, Y, Z = 0, 1, 2


def fs(*edges):
    return frozenset(edges)


def test_build_graph_basics():
    g = THETA
    assert g.n_vertices == 2 and g.n_edges == 3 and g.genus() == 2
    assert g.sort_edges({Z, X}) == [X, Z]
    assert not g.is_loop(X)
    assert corpus.loop_graph().is_loop(0)


def test_build_graph_rejects_bad_input():
    with pytest.raises(EmptyGraph):
        build_graph([])
    with pytest.raises(DisconnectedGraph):
        build_graph([(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        build_graph([(0, 1), (0, 1)], edge_order=[0, 0])


def test_dsl_and_json_parsing():
    g = graph_from_dsl("v0-v1 v0-v1 v0-v1")
    assert g.n_edges == 3 and g.genus() == 2
    assert graph_from_dsl("a:0-1 b:1-2").n_vertices == 3
    with pytest.raises(ParseError):
        graph_from_dsl("")
    with pytest.raises(ParseError):
        graph_from_dsl("v0=v1")
    with pytest.raises(ParseError):
        graph_from_json("not json")
    with pytest.raises(ParseError):
        graph_from_json('{"edges": [[0, 1], [2, 3]]}')


def test_json_roundtrip_is_deterministic():
    text = graph_to_json(THETA)
    g2 = graph_from_json(text)
    assert g2.same_labeled(THETA)
    assert graph_to_json(g2) == text


def test_delete_contract():
    g = THETA
    assert g.delete({Z}).n_edges == 2
    assert g.contract({Z}).genus() == 2  # both survivors become loops
    with pytest.raises(BondDeletion):
        corpus.bridge_graph().delete({0})
    # deleting every edge of an all-loops graph leaves the one-vertex graph
    empty = corpus.loop_graph().delete({0})
    assert empty.n_edges == 0 and empty.n_vertices == 1 and empty.genus() == 0


def test_cycles_and_bonds_theta():
    cycles = set(enumerate_cycles(THETA))
    assert cycles == {fs(X, Y), fs(X, Z), fs(Y, Z)}
    assert enumerate_bonds(THETA) == [fs(X, Y, Z)]
    assert contains_bond(THETA, {X, Y, Z})
    assert not contains_bond(THETA, {X, Y})


def test_face_complex_theta():
    faces = face_complex(THETA)
    assert [len(level) for level in faces.levels] == [1, 3, 3]
    assert fs(X, Y) in faces and fs(X, Y, Z) not in faces
    assert faces.levels[2] == [fs(X, Y), fs(X, Z), fs(Y, Z)]
    assert set(faces.levels[2]) == set(spanning_cotrees(THETA))


def test_loop_graph_faces():
    faces = face_complex(corpus.loop_graph())
    assert [len(level) for level in faces.levels] == [1, 1]


def test_spanning_tree_predicates():
    assert is_spanning_tree(THETA, {X})
    assert not is_spanning_tree(THETA, {X, Y})
    assert is_spanning_cotree(THETA, {Y, Z})
    assert not is_spanning_cotree(THETA, {Y})


def test_boundary_matrix_and_cycles():
    bd = boundary_matrix(THETA)
    assert len(bd) == 2 and len(bd[0]) == 3
    cyc = fundamental_cycle(THETA, fs(Z), X)
    assert cyc[X] == 1 and set(cyc) == {X, Z}
    # loops give their own one-edge cycle
    assert fundamental_cycle(corpus.loop_graph(), fs(), 0) == {0: 1}


def test_cycle_basis_identity_block():
    cb = CycleBasis(THETA, fs(X, Y))
    assert cb.pairing({X, Y}) == [[1, 0], [0, 1]]
    assert all(v in (-1, 0, 1) for row in cb.pairing(THETA.eids) for v in row)
    with pytest.raises(NotACotree):
        CycleBasis(THETA, fs(X))


def test_spanning_tree_count():
    assert spanning_tree_count(THETA) == 3
    assert spanning_tree_count(corpus.k4_graph()) == 16
    assert spanning_tree_count(corpus.loop_graph()) == 1


def test_wedge_graph():
    w = wedge(corpus.loop_graph(), corpus.loop_graph())
    assert w.n_vertices == 1 and w.n_edges == 2 and w.genus() == 2


def test_generic_character_theta():
    ok, violations = is_generic_character(THETA, [0, 0, 0])
    assert not ok and violations
    ok, violations = is_generic_character(THETA, [0, 0, 1])
    assert ok and not violations
    # genus zero: every character is generic
    assert is_generic_character(corpus.bridge_graph(), [5]) == (True, [])
