import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import rand_matrix
from tamecodes.field import QQ, FieldError, FieldSpec
from tamecodes.linalg import (MatrixF, Subspace, image, inverse, nullspace, preimage, quotient, rank, section,
                              solve)

GF5 = FieldSpec(5)


def mat(fld, rows):
    return MatrixF.from_rows(fld, rows)


# ---------------------------------------------------------------- fields


def test_field_rejects_composites_and_large_primes():
    for bad in (0, 1, 4, 91, 2**31 + 11):
        with pytest.raises(FieldError):
            FieldSpec(bad)
    assert FieldSpec(2**31 - 1).p == 2**31 - 1


def test_field_normalizes_entries():
    assert GF5(-1) == 4
    assert GF5("3/2") == 4
    assert QQ("6/4") == Fraction(3, 2)
    assert GF5.inv(GF5(2)) == 3
    with pytest.raises(ZeroDivisionError):
        GF5.inv(0)


def test_field_json_round_trip():
    for fld in (QQ, GF5):
        assert FieldSpec.from_json(fld.spec_json()) == fld


# ---------------------------------------------------------------- rank


def test_rank_of_zero_and_identity():
    assert rank(MatrixF.zeros(QQ, 3, 3)) == 0
    for n in range(5):
        assert rank(MatrixF.identity(GF5, n)) == n


def test_rank_of_monodromy_matrix_from_worked_example():
    assert rank(mat(QQ, [[3, 0, 0], [1, 2, -1], [0, 0, 2]])) == 3


def test_rank_depends_on_characteristic():
    m = [[1, 1], [1, -1]]
    assert rank(mat(QQ, m)) == 2
    assert rank(mat(FieldSpec(2), m)) == 1


# ---------------------------------------------------------------- nullspace


def test_nullspace_of_identity_is_zero():
    assert nullspace(MatrixF.identity(GF5, 4)).dim == 0


def test_nullspace_of_difference_row():
    ns = nullspace(mat(GF5, [[1, -1]]))
    assert ns.vectors() == [(1, 1)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_nullspace_random_gf5(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, GF5, 4, 6)
    ns = nullspace(m)
    assert ns.dim == 6 - rank(m)
    assert (m @ ns.basis).is_zero()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**6))
def test_rank_nullity(rows, cols, seed):
    m = rand_matrix(random.Random(seed), FieldSpec(3), rows, cols)
    assert rank(m) + nullspace(m).dim == cols
    assert rank(m) == rank(m.T)


# ---------------------------------------------------------------- solve


def test_solve_identity_returns_rhs():
    assert solve(MatrixF.identity(GF5, 3), (1, 2, 3)) == (1, 2, 3)


def test_solve_inconsistent_returns_none():
    assert solve(MatrixF.zeros(GF5, 2, 2), (0, 1)) is None


def test_solve_rejects_wrong_length():
    with pytest.raises(ValueError):
        solve(MatrixF.identity(GF5, 2), (1, 2, 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_solve_consistent_random(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, GF5, 4, 3)
    b = m.apply(tuple(rng.randrange(5) for _ in range(3)))
    x = solve(m, b)
    assert x is not None and m.apply(x) == b


# ---------------------------------------------------------------- preimage and quotient


def test_preimage_of_full_and_zero():
    m = mat(GF5, [[1, 2, 0], [0, 0, 1]])
    assert preimage(m, Subspace.full(GF5, 2)) == Subspace.full(GF5, 3)
    assert preimage(m, Subspace.zero(GF5, 2)) == nullspace(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_preimage_random(seed):
    rng = random.Random(seed)
    m = rand_matrix(rng, GF5, 4, 4)
    u = Subspace.span(GF5, 4, [tuple(rng.randrange(5) for _ in range(4)) for _ in range(2)])
    pre = preimage(m, u)
    assert all(u.contains(m.apply(v)) for v in pre.vectors())
    assert nullspace(m).issubset(pre)
    # everything mapping into u is caught: dimension count
    assert pre.dim == nullspace(m).dim + (image(m) & u).dim


def test_quotient_edge_cases():
    assert quotient(3, Subspace.zero(GF5, 3)) == MatrixF.identity(GF5, 3)
    q = quotient(3, Subspace.full(GF5, 3))
    assert (q.rows, q.cols) == (0, 3)


def test_quotient_by_diagonal():
    u = Subspace.span(GF5, 2, [(1, 1)])
    q = quotient(2, u)
    assert (q.rows, q.cols) == (1, 2)
    assert rank(q) == 1
    assert q.apply((1, 1)) == (0,)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_quotient_kernel_and_section(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    u = Subspace.span(GF5, n, [tuple(rng.randrange(5) for _ in range(n)) for _ in range(rng.randint(0, n))])
    q = quotient(n, u)
    assert rank(q) == n - u.dim
    assert nullspace(q) == u
    assert q @ section(n, u) == MatrixF.identity(GF5, n - u.dim)


# ---------------------------------------------------------------- subspaces


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_subspace_canonical(seed):
    rng = random.Random(seed)
    vecs = [tuple(rng.randrange(5) for _ in range(4)) for _ in range(3)]
    a = Subspace.span(GF5, 4, vecs)
    # a random recombination spans the same space
    mixed = []
    for _ in range(6):
        coeffs = [rng.randrange(5) for _ in vecs]
        mixed.append(tuple(GF5(sum(c * v[i] for c, v in zip(coeffs, vecs))) for i in range(4)))
    b = Subspace.span(GF5, 4, mixed + vecs)
    assert a.basis == b.basis
    assert Subspace.span(GF5, 4, a.vectors()).basis == a.basis


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_sum_and_intersection_dimensions(seed):
    rng = random.Random(seed)
    u = Subspace.span(GF5, 5, [tuple(rng.randrange(5) for _ in range(5)) for _ in range(3)])
    w = Subspace.span(GF5, 5, [tuple(rng.randrange(5) for _ in range(5)) for _ in range(3)])
    assert (u + w).dim + (u & w).dim == u.dim + w.dim
    assert (u & w).issubset(u) and u.issubset(u + w)


def test_inverse():
    m = mat(QQ, [[2, 1], [1, 1]])
    assert m @ inverse(m) == MatrixF.identity(QQ, 2)
    with pytest.raises(ValueError):
        inverse(mat(QQ, [[1, 1], [1, 1]]))
