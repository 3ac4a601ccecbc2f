"""The face-stratified wedge complex: differential, reduction, f/g/h, ring."""

import pytest

from ckskit import corpus
from ckskit.activity import coherent_cotree
from ckskit.checks import GraphContext
from ckskit.errors import ChoiceOutsideIn, EdgeIsBondOrLoop
from ckskit.ht import (
    ChoiceFunction,
    DelConR,
    FGH,
    HTComplex,
    RRing,
    build_ht,
    reduce_monomial,
)
from ckskit.intlinalg import is_zero_matrix, matmul

THETA = corpus.theta_graph()
X, Y, Z = 0, 1, 2


def fs(*edges):
    return frozenset(edges)


@pytest.fixture(scope="module")
def theta():
    cc = coherent_cotree(THETA)
    ht = HTComplex(THETA, cc)
    return ht, FGH(ht, ChoiceFunction.theta_preset(cc))


def test_basis_dimensions(theta):
    ht, _ = theta
    assert ht.dim(0, 0) == 1 and ht.dim(0, 1) == 2 and ht.dim(0, 2) == 1
    assert ht.dim(1, 0) == 3 and ht.dim(1, 1) == 3
    assert ht.dim(2, 0) == 3 and ht.dim(2, 1) == 0


def test_differential_of_top_cycle(theta):
    # the cycle attached to the cotree of {z} pairs +1 with x and -1 with y
    ht, _ = theta
    assert ht.d_element(fs(Z), (X,)) == {(fs(X, Z), ()): 1, (fs(Y, Z), ()): -1}


def test_d_squared_is_zero(theta):
    ht, _ = theta
    for p in range(3):
        for q in range(3 - p):
            prod = matmul(ht.d_matrix(p + 1, q - 1), ht.d_matrix(p, q))
            assert not prod or is_zero_matrix(prod)


def test_reduce_monomial_square(theta):
    # z^2 rewrites to a single square-free monomial sharing its ring class
    ht, fgh = theta
    red = reduce_monomial(ht, {Z: 2})
    assert red == {fs(X, Z): 1}
    assert fgh.f_vector(red) == {fs(Y, Z): 1}


def test_reduce_monomial_bond_support_vanishes(theta):
    ht, _ = theta
    assert reduce_monomial(ht, {X: 1, Y: 1, Z: 1}) == {}
    assert reduce_monomial(ht, {X: 2, Y: 1, Z: 1}) == {}


def test_reduce_monomial_trivial_cases(theta):
    ht, _ = theta
    assert reduce_monomial(ht, {}) == {fs(): 1}
    assert reduce_monomial(ht, {X: 1, Y: 1}) == {fs(X, Y): 1}


def test_choice_function_validation():
    cc = coherent_cotree(THETA)
    with pytest.raises(ChoiceOutsideIn):
        ChoiceFunction(cc, {fs(X): Y})
    minimal = ChoiceFunction.minimal(cc)
    assert minimal[fs(X, Y)] == X and minimal[fs(X, Z)] == X
    with pytest.raises(ValueError):
        ChoiceFunction.theta_preset(coherent_cotree(corpus.loop_graph()))


def test_f_collapses_degree_one_faces(theta):
    _, fgh = theta
    for e in (X, Y, Z):
        assert fgh.f_face(fs(e)) == {fs(Z): 1}


def test_g_is_basis_inclusion(theta):
    _, fgh = theta
    assert fgh.g_face(fs(Z)) == {(fs(Z), ()): 1}


def test_homotopy_table(theta):
    _, fgh = theta
    expected = {
        (fs(), ()): {},
        (fs(X), ()): {(fs(), (X,)): 1},
        (fs(Y), ()): {(fs(), (Y,)): 1},
        (fs(Z), ()): {},
        (fs(X), (Y,)): {(fs(), (X, Y)): 1},
        (fs(Y), (X,)): {},
        (fs(Z), (X,)): {},
        (fs(X, Y), ()): {(fs(Y), (X,)): 1},
        (fs(X, Z), ()): {(fs(Z), (X,)): 1},
        (fs(Y, Z), ()): {},
    }
    for (s, w), val in expected.items():
        assert fgh.h_element(s, w) == val, (s, w)


def test_homotopy_identities_theta():
    ctx = GraphContext(THETA, choice="theta")
    from ckskit.checks import check_ht_identities
    ok, witness = check_ht_identities(ctx)
    assert ok, witness


def test_ring_multiplication_theta(theta):
    ht, fgh = theta
    rr = RRing(ht, fgh.choice)
    assert rr.dims == [1, 1, 1]
    assert rr.multiply(fs(Z), fs(Z)) == {fs(Y, Z): 1}
    assert rr.multiply(fs(), fs(Z)) == {fs(Z): 1}
    assert rr.multiply(fs(Z), fs(Y, Z)) == {}


def test_delcon_basis_split():
    dc = DelConR(THETA, X)
    mid, dl, cn = dc.dims()
    assert dc.check_partition()
    assert mid == [1, 1, 1] and dl == [1, 1] and cn == [1, 0, 0]
    assert dc.include(fs()) == fs(X)
    assert dc.project(fs(X)) is None


def test_delcon_rejects_loops_and_bridges():
    with pytest.raises(EdgeIsBondOrLoop):
        DelConR(corpus.loop_graph(), 0)
    with pytest.raises(EdgeIsBondOrLoop):
        DelConR(corpus.bridge_graph(), 0)
