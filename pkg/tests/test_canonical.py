import random

from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import rand_invertible, rand_matrix
from tamecodes.canonical import Poly, canonical_form, companion, invariant_factors, jordan_block
from tamecodes.field import QQ, FieldSpec
from tamecodes.linalg import MatrixF, inverse

GF3, GF5 = FieldSpec(3), FieldSpec(5)


def test_jordan_cell_two_two():
    form = canonical_form(MatrixF.from_rows(QQ, [[2, 1], [0, 2]]))
    assert form.split_cells == ((2, 2),)
    assert form.residual_blocks == ()


def test_identity_gives_unit_cells():
    form = canonical_form(MatrixF.identity(GF5, 4))
    assert form.split_cells == ((1, 1),) * 4


def test_irreducible_quadratic_stays_residual():
    x2_plus_1 = Poly.make(GF3, [1, 0, 1])
    assert all(x2_plus_1(GF3(a)) != 0 for a in range(3))  # no root in GF(3)
    form = canonical_form(companion(x2_plus_1))
    assert form.split_cells == ()
    assert form.residual_blocks == ((x2_plus_1, 1),)


def test_over_gf5_the_same_quadratic_splits():
    form = canonical_form(companion(Poly.make(GF5, [1, 0, 1])))
    assert sorted(form.split_cells) == [(2, 1), (3, 1)]


def test_monodromy_of_worked_example():
    t = MatrixF.from_rows(QQ, [[2, -1], [0, 2]])
    assert canonical_form(t).split_cells == ((2, 2),)


def _check_form(t: MatrixF):
    form = canonical_form(t)
    prod = Poly.constant(t.field, 1)
    for d in form.invariant_factors:
        prod = prod * d
    assert prod == form.char_poly
    for a, b in zip(form.invariant_factors, form.invariant_factors[1:]):
        assert (b % a).is_zero()
    size = sum(k for _, k in form.split_cells) + sum(p.degree * e for p, e in form.residual_blocks)
    assert size == t.rows
    return form


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_invariant_factor_bookkeeping(seed, p):
    rng = random.Random(seed)
    fld = FieldSpec(p)
    n = rng.randint(0, 5)
    _check_form(rand_matrix(rng, fld, n, n))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_similarity_invariance(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    t = rand_matrix(rng, GF5, n, n)
    g = rand_invertible(rng, GF5, n)
    assert invariant_factors(g @ t @ inverse(g)) == invariant_factors(t)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 3)), min_size=1, max_size=3), st.integers(0, 10**6))
def test_known_jordan_blocks_are_recovered(cells, seed):
    rng = random.Random(seed)
    t = MatrixF.block_diag(GF5, [jordan_block(GF5, lam, k) for lam, k in cells])
    g = rand_invertible(rng, GF5, t.rows)
    form = _check_form(g @ t @ inverse(g))
    assert sorted(form.split_cells) == sorted((GF5(lam), k) for lam, k in cells)


def test_rational_blocks_with_irrational_eigenvalues():
    # x^2 - 2 has no rational root
    form = canonical_form(companion(Poly.make(QQ, [-2, 0, 1])))
    assert form.split_cells == ()
    assert form.residual_blocks[0][0].degree == 2
