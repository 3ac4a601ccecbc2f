"""Exact linear algebra: Smith normal form, cohomology, splitting certificates."""

import random

import pytest

from ckskit.errors import NotAComplex
from ckskit.intlinalg import (
    CochainComplex,
    det,
    identity,
    matmul,
    rank,
    smith_normal_form,
    solve_exact,
    verify_direct_sum,
)


def test_snf_identity():
    a = identity(4)
    snf = smith_normal_form(a)
    assert snf.D == identity(4)
    assert snf.invariant_factors == [1, 1, 1, 1]
    assert snf.verify(a)


def test_snf_generic_2x2():
    a = [[1, 2], [3, 4]]
    snf = smith_normal_form(a)
    assert snf.invariant_factors == [1, 2]
    assert snf.verify(a)


def test_snf_common_factor_2x2():
    # gcd of entries is 2 and |det| = 8, which forces the factors (2, 4)
    a = [[2, 4], [6, 8]]
    snf = smith_normal_form(a)
    assert snf.invariant_factors == [2, 4]
    assert snf.verify(a)


def test_snf_nonsquare_and_zero():
    snf = smith_normal_form([[0, 0], [0, 0], [0, 0]])
    assert snf.rank == 0 and snf.invariant_factors == []
    a = [[1, 2, 3], [4, 5, 6]]
    snf = smith_normal_form(a)
    assert snf.verify(a)
    assert snf.rank == rank(a) == 2
    assert snf.invariant_factors == [1, 3]


def test_snf_divisibility_chain_random():
    rng = random.Random(20240824)
    for trial in range(25):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        a = [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)]
        snf = smith_normal_form(a)
        assert snf.verify(a)
        assert snf.rank == rank(a)
        for d1, d2 in zip(snf.invariant_factors, snf.invariant_factors[1:]):
            assert d1 > 0 and d2 % d1 == 0


def test_snf_large_random_reconstruction():
    rng = random.Random(7)
    a = [[rng.randint(-10**6, 10**6) for _ in range(40)] for _ in range(40)]
    snf = smith_normal_form(a)
    assert matmul(matmul(snf.U, a), snf.V) == snf.D
    assert abs(det(snf.U)) == 1 and abs(det(snf.V)) == 1
    assert snf.rank == rank(a)


def test_det_and_solve():
    assert det([[2, 0], [0, 3]]) == 6
    assert det([[1, 2], [2, 4]]) == 0
    sol = solve_exact([[2, 1], [1, 1]], [3, 2])
    assert sol == [1, 1]
    with pytest.raises(ValueError):
        solve_exact([[1, 2], [2, 4]], [1, 1])


def test_cohomology_zero_differentials():
    cx = CochainComplex({0: ["a", "b"], 1: ["c"]}, {})
    assert cx.cohomology() == {0: (2, []), 1: (1, [])}


def test_cohomology_multiplication_by_two():
    cx = CochainComplex({0: ["a"], 1: ["b"]}, {0: [[2]]})
    assert cx.cohomology() == {0: (0, []), 1: (0, [2])}


def test_cohomology_rejects_non_complex():
    with pytest.raises(NotAComplex):
        CochainComplex({0: ["a"], 1: ["b"], 2: ["c"]},
                       {0: [[1]], 1: [[1]]})


def test_cohomology_invariant_under_basis_permutation():
    d = [[1, 0, 1], [0, 2, 0]]
    cx = CochainComplex({0: list("abc"), 1: list("de")}, {0: d})
    perm_d = [[row[j] for j in (2, 0, 1)] for row in d][::-1]
    cx2 = CochainComplex({0: list("cab"), 1: list("ed")}, {0: perm_d})
    assert cx.cohomology() == cx2.cohomology()


def test_direct_sum_unimodular_pair():
    assert verify_direct_sum(2, [[1], [1]], [[0], [1]])


def test_direct_sum_index_two_fails():
    assert not verify_direct_sum(2, [[2], [0]], [[0], [1]])


def test_direct_sum_edge_cases():
    assert verify_direct_sum(0, [], [])
    assert not verify_direct_sum(2, [[], []], [[], []])
    assert verify_direct_sum(2, [[], []], [[1, 0], [0, 1]])
