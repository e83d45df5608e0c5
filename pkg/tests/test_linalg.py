from fractions import Fraction as F

import pytest

from gspencer.linalg import (InputError, RMatrix, Subspace, deterministic_complement,
                             kernel_basis, membership, rank, rref, solve_linear,
                             subspace_intersection, subspace_sum)

from conftest import rng_for, int_vector


def mat(rows):
    return RMatrix(rows)


def test_rref_identity_fixed():
    m = RMatrix.identity(2)
    assert rref(m) == m


def test_rref_rank_one():
    assert rref(mat([[1, 2], [2, 4]])).data == ((F(1), F(2)), (F(0), F(0)))


def test_rref_row_swap():
    assert rref(mat([[0, 1], [1, 0]])) == RMatrix.identity(2)


def test_rref_idempotent_random():
    rng = rng_for("rref")
    for _ in range(30):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = mat([[rng.randint(-4, 4) for _ in range(c)] for _ in range(r)])
        red = rref(m)
        assert rref(red) == red


def test_rank_nullity():
    rng = rng_for("ranknull")
    for _ in range(30):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = mat([[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)])
        assert rank(m) + kernel_basis(m).dim == c


def test_kernel_identity():
    assert kernel_basis(RMatrix.identity(3)).dim == 0


def test_kernel_rank_one():
    k = kernel_basis(mat([[1, 2], [2, 4]]))
    expected = Subspace.from_vectors(2, [(F(-2), F(1))])
    assert k == expected


def test_kernel_zero_matrix():
    assert kernel_basis(RMatrix.zeros(2, 3)) == Subspace.full(3)


def test_solve_scalar():
    x, ker = solve_linear(mat([[2]]), [F(3)])
    assert x == (F(3, 2),)
    assert ker.dim == 0


def test_solve_inconsistent():
    assert solve_linear(mat([[1, 1], [1, 1]]), [F(1), F(2)]) is None


def test_solve_with_kernel():
    x, ker = solve_linear(mat([[1, 0], [0, 0]]), [F(5), F(0)])
    assert x == (F(5), F(0))
    assert ker == Subspace.from_vectors(2, [(F(0), F(1))])


def test_solve_dimension_mismatch():
    with pytest.raises(InputError):
        solve_linear(mat([[1, 0]]), [F(1), F(2)])


def e(n, i):
    return tuple(F(1) if j == i else F(0) for j in range(n))


def test_intersection_coordinate_planes():
    a = Subspace.from_vectors(3, [e(3, 0), e(3, 1)])
    b = Subspace.from_vectors(3, [e(3, 1), e(3, 2)])
    assert subspace_intersection(a, b) == Subspace.from_vectors(3, [e(3, 1)])


def test_intersection_idempotent():
    s = Subspace.from_vectors(3, [(F(1), F(2), F(0)), (F(0), F(1), F(1))])
    assert subspace_intersection(s, s) == s


def test_intersection_trivial():
    a = Subspace.from_vectors(2, [e(2, 0)])
    b = Subspace.from_vectors(2, [e(2, 1)])
    assert subspace_intersection(a, b).dim == 0


def test_intersection_ambient_mismatch():
    with pytest.raises(InputError):
        subspace_intersection(Subspace.full(2), Subspace.full(3))


def test_dimension_formula_bruteforce():
    # dim(A^B) + dim(A+B) = dim A + dim B, with the sum rank computed from
    # the raw spanning set as an independent check
    rng = rng_for("dimformula")
    for _ in range(40):
        n = rng.randint(2, 5)
        a = Subspace.from_vectors(n, [int_vector(rng, n) for _ in range(rng.randint(0, n))])
        b = Subspace.from_vectors(n, [int_vector(rng, n) for _ in range(rng.randint(0, n))])
        inter = subspace_intersection(a, b)
        brute_sum_rank = rank(RMatrix(a.basis_vectors() + b.basis_vectors())) \
            if a.dim + b.dim else 0
        assert subspace_sum(a, b).dim == brute_sum_rank
        assert inter.dim + brute_sum_rank == a.dim + b.dim


def test_complement_of_zero():
    z = Subspace.zero(2)
    assert deterministic_complement(z, Subspace.full(2)) == Subspace.full(2)


def test_complement_greedy_picks_e2():
    s = Subspace.from_vectors(2, [e(2, 0)])
    assert deterministic_complement(s, Subspace.full(2)) == Subspace.from_vectors(2, [e(2, 1)])


def test_complement_of_self():
    s = Subspace.from_vectors(3, [e(3, 0), e(3, 2)])
    assert deterministic_complement(s, s).dim == 0


def test_complement_containment_error():
    with pytest.raises(InputError):
        deterministic_complement(Subspace.full(2), Subspace.from_vectors(2, [e(2, 0)]))


def test_complement_direct_sum_property():
    rng = rng_for("complement")
    for _ in range(40):
        n = rng.randint(2, 5)
        sup = Subspace.from_vectors(n, [int_vector(rng, n) for _ in range(rng.randint(1, n + 1))])
        if sup.dim == 0:
            continue
        k = rng.randint(0, sup.dim)
        sub = Subspace.from_vectors(n, sup.basis_vectors()[:k])
        comp = deterministic_complement(sub, sup)
        assert subspace_sum(sub, comp) == sup
        assert subspace_intersection(sub, comp).dim == 0
        assert sub.dim + comp.dim == sup.dim


def test_membership():
    s = Subspace.from_vectors(2, [(F(1), F(1))])
    assert membership((F(1), F(1)), s)
    assert membership((F(2), F(2)), s)
    assert not membership((F(1), F(0), ), Subspace.from_vectors(2, [e(2, 1)]))
    assert membership((F(0), F(0)), s)
    assert membership((F(0), F(0)), Subspace.zero(2))


def test_rational_invariants():
    # scalars stay in lowest terms with positive denominators
    x = F(4, -6)
    assert x.denominator > 0 and abs(x.numerator) == 2 and x.denominator == 3
    red = rref(mat([[F(1, 3), F(1, 6)], [F(2), F(1)]]))
    for row in red.data:
        for v in row:
            assert v.denominator > 0
