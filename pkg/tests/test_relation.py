import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from randgen import rand_circle_rep, rand_invertible, rand_matrix, rand_relation
from tamecodes.canonical import canonical_form
from tamecodes.field import QQ, FieldSpec
from tamecodes.linalg import MatrixF, Subspace, nullspace
from tamecodes.quiver import CircleRep, decompose
from tamecodes.relation import (LinearRelation, compose, dagger, graph, identity_relation, limit_law_checks, limits,
                                parts, power, regular_part, relation_from_cycle, relation_from_pair)

GF2, GF5 = FieldSpec(2), FieldSpec(5)

OMEGA_1 = [[3, 0, 0], [0, 2, -1], [0, 0, 2], [0, 0, 0]]
OMEGA_2 = [[0, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]


def omega_relation():
    return relation_from_pair(MatrixF.from_rows(QQ, OMEGA_1), MatrixF.from_rows(QQ, OMEGA_2))


def test_graph_of_identity_is_diagonal():
    rel = graph(MatrixF.identity(GF5, 3))
    assert rel.space == Subspace.span(GF5, 6, [(1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0), (0, 0, 1, 0, 0, 1)])
    assert rel == identity_relation(GF5, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_dagger_is_an_involution(seed):
    rng = random.Random(seed)
    rel = LinearRelation.span(GF5, 2, 3, [(tuple(rng.randrange(5) for _ in range(2)),
                                           tuple(rng.randrange(5) for _ in range(3))) for _ in range(3)])
    assert dagger(dagger(rel)) == rel


def test_graph_dagger_graph_contains_diagonal():
    m = MatrixF.from_rows(GF5, [[1, 2, 0], [0, 1, 1]])
    rel = compose(dagger(graph(m)), graph(m))
    for v in MatrixF.identity(GF5, 3).columns():
        assert rel.contains(v, v)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_composition_of_graphs(seed):
    rng = random.Random(seed)
    a, b = rand_matrix(rng, GF5, 3, 2), rand_matrix(rng, GF5, 2, 4)
    assert compose(graph(a), graph(b)) == graph(a @ b)
    rel = rand_relation(rng, GF5, 3)
    assert compose(rel, identity_relation(GF5, 3)) == rel
    assert compose(identity_relation(GF5, 3), rel) == rel


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_composition_is_associative(seed):
    rng = random.Random(seed)
    r, s, t = (rand_relation(rng, GF5, 3) for _ in range(3))
    assert compose(t, compose(s, r)) == compose(compose(t, s), r)


def _members(rel):
    """All pairs in the relation, by enumerating GF(2) vectors."""
    vecs = lambda n: list(itertools.product((0, 1), repeat=n))  # noqa: E731
    return {(v, w) for v in vecs(rel.dim_src) for w in vecs(rel.dim_dst) if rel.contains(v, w)}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_composition_matches_enumeration_over_gf2(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 3)
    r, s = rand_relation(rng, GF2, n), rand_relation(rng, GF2, n)
    rs, ss = _members(r), _members(s)
    expected = {(v, u) for v, w in rs for w2, u in ss if w == w2}
    assert _members(compose(s, r)) == expected


def test_parts_of_a_graph():
    m = MatrixF.from_rows(GF5, [[1, 1, 0], [0, 0, 0]])
    pt = parts(graph(m))
    assert pt.dom == Subspace.full(GF5, 3)
    assert pt.mul.dim == 0
    assert pt.ker == nullspace(m)


def test_parts_of_the_full_relation():
    rel = LinearRelation(GF5, 2, 3, Subspace.full(GF5, 5))
    pt = parts(rel)
    assert (pt.dom.dim, pt.img.dim, pt.ker.dim, pt.mul.dim) == (2, 3, 2, 3)


def test_parts_of_omega_relation():
    pt = parts(omega_relation())
    # omega_1 v = omega_2 w forces 3 v1 = 0, 2 v2 - v3 = w2, 2 v3 = w3
    assert pt.dom == Subspace.span(QQ, 3, [(0, 1, 0), (0, 0, 1)])
    assert pt.mul == Subspace.span(QQ, 3, [(1, 0, 0)])
    assert pt.ker.dim == 0
    assert pt.img == Subspace.full(QQ, 3)


def test_limits_of_invertible_graph():
    t = rand_invertible(random.Random(1), GF5, 3)
    lim = limits(graph(t))
    assert lim.K_minus.dim == lim.K_plus.dim == 0
    assert lim.D_minus.dim == lim.D_plus.dim == lim.D.dim == 3


def test_zero_relation_has_empty_regular_part():
    rel = LinearRelation(QQ, 1, 1, Subspace.zero(QQ, 2))
    lim = limits(rel)
    assert lim.D_plus.dim == 0 and lim.K_plus.dim == 0
    assert regular_part(rel).dim == 0


def test_limits_stabilize_at_powers():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 3)
        rel = rand_relation(rng, GF5, n)
        lim = limits(rel)
        rn = power(rel, n)
        assert lim.D_plus == parts(rn).dom
        assert lim.D_minus == parts(rn).img
        assert lim.K_plus == parts(rn).ker
        assert lim.K_minus == parts(rn).mul


def test_omega_relation_regular_part():
    reg = regular_part(omega_relation())
    assert reg.dim == 2
    assert reg.canonical_form.split_cells == ((2, 2),)
    assert all(ok for _, ok in limit_law_checks(reg.limits))


def test_regular_part_of_invertible_graph_is_itself():
    t = rand_invertible(random.Random(11), GF5, 3)
    reg = regular_part(graph(t))
    assert reg.canonical_form.invariant_factors == canonical_form(t).invariant_factors


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 5]))
def test_limit_laws_and_invertibility(seed, p):
    rng = random.Random(seed)
    fld = FieldSpec(p)
    rel = rand_relation(rng, fld, rng.randint(0, 4))
    reg = regular_part(rel)
    for name, ok in limit_law_checks(reg.limits):
        assert ok, name
    pt = parts(reg.relation)
    assert pt.dom.dim == pt.img.dim == reg.dim and pt.ker.dim == pt.mul.dim == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 5]))
def test_regular_part_matches_single_angle_quiver(seed, p):
    rng = random.Random(seed)
    fld = FieldSpec(p)
    n = rng.randint(0, 3)
    rel = rand_relation(rng, fld, n)
    first, second = rel._halves()
    rep = CircleRep(fld, (rel.dim,), (n,), (second,), (first,))
    assert regular_part(rel).canonical_form.invariant_factors == decompose(rep).canonical.invariant_factors


def test_cycle_of_identity_rep_is_identity():
    eye = MatrixF.identity(GF5, 2)
    rep = CircleRep(GF5, (2, 2), (2, 2), (eye, eye), (eye, eye))
    assert relation_from_cycle(rep) == identity_relation(GF5, 2)


def test_cycle_of_worked_example(worked_rho1):
    reg = regular_part(relation_from_cycle(worked_rho1))
    assert reg.canonical_form.split_cells == ((2, 2),)
    assert reg.canonical_form.invariant_factors == regular_part(omega_relation()).canonical_form.invariant_factors


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_cycle_regular_part_matches_quiver_monodromy(seed):
    rep = rand_circle_rep(random.Random(seed), GF5)
    reg = regular_part(relation_from_cycle(rep))
    assert reg.canonical_form.invariant_factors == decompose(rep).canonical.invariant_factors


def test_non_square_relation_rejected():
    with pytest.raises(ValueError):
        limits(graph(MatrixF.zeros(GF5, 2, 3)))
