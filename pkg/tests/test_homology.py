import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamecodes import builders as bld
from tamecodes.field import QQ, FieldSpec
from tamecodes.homology import (SimplicialComplex, SimplicialError, SimplicialMap, betti, boundary_matrix,
                                homology_basis, induced_map)
from tamecodes.linalg import MatrixF, rank

GF2, GF5 = FieldSpec(2), FieldSpec(5)


def sphere():
    return SimplicialComplex.from_simplices(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def test_edge_boundary():
    k = SimplicialComplex.from_simplices(2, [(0, 1)])
    assert boundary_matrix(k, 1, QQ).to_json() == [[-1], [1]]


def test_hollow_triangle_boundary_rank():
    d = boundary_matrix(bld.cycle(3), 1, QQ)
    assert (d.rows, d.cols) == (3, 3) and rank(d) == 2


def test_sphere_betti():
    assert [betti(sphere(), r, QQ) for r in range(3)] == [1, 0, 1]


def test_solid_simplex_betti():
    k = SimplicialComplex.from_simplices(4, [(0, 1, 2, 3)])
    assert [betti(k, r, GF5) for r in range(4)] == [1, 0, 0, 0]


@pytest.mark.parametrize("k", [sphere(), bld.cycle(6), bld.bouquet([3, 4]),
                               SimplicialComplex.from_simplices(5, [(0, 1, 2, 3, 4)])])
def test_boundary_squares_to_zero(k):
    for r in range(1, k.dimension + 1):
        assert (boundary_matrix(k, r, GF5) @ boundary_matrix(k, r + 1, GF5)).is_zero()


def test_basic_homology_dimensions():
    assert homology_basis(bld.cycle(6), 1, QQ).dim == 1
    assert homology_basis(bld.point(), 0, QQ).dim == 1
    three = bld.disjoint_union([bld.cycle(3), bld.cycle(4), bld.cycle(5)])
    assert homology_basis(three, 1, QQ).dim == 3
    assert homology_basis(three, 0, QQ).dim == 3


def test_representatives_are_cycles():
    for k in (bld.bouquet([3, 3, 4]), sphere()):
        for r in range(3):
            hb = homology_basis(k, r, GF5)
            assert (boundary_matrix(k, r, GF5) @ hb.representatives).is_zero()


def test_insertion_order_does_not_matter():
    tris = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    a = SimplicialComplex.from_simplices(4, tris)
    b = SimplicialComplex.from_simplices(4, [tuple(reversed(t)) for t in reversed(tris)] + [(2, 3)])
    assert a == b
    assert homology_basis(a, 2, QQ).representatives == homology_basis(b, 2, QQ).representatives


def test_induced_maps_on_circles():
    assert induced_map(SimplicialMap.identity(bld.cycle(6)), 1, QQ) == MatrixF.identity(QQ, 1)
    assert induced_map(bld.wrap(6, 2), 1, QQ).to_json() == [[2]]
    assert induced_map(bld.reflection(6), 1, QQ).to_json() == [[-1]]
    assert induced_map(bld.reflection(6), 1, GF2).to_json() == [[1]]
    assert induced_map(bld.reflection(6), 0, QQ).to_json() == [[1]]


def test_matrix_map_realizes_matrix():
    m = [[3, 0, 0], [0, 2, -1], [0, 0, 2]]
    f = bld.matrix_map([9, 9, 9], [3, 3, 3], m)
    assert induced_map(f, 1, QQ).to_json() == m


def test_invalid_maps_rejected():
    with pytest.raises(SimplicialError):
        SimplicialMap(bld.cycle(3), bld.cycle(4), (0, 1, 3))  # edge {0,3} exists but {1,3} does not
    with pytest.raises(SimplicialError):
        SimplicialMap(bld.cycle(3), bld.cycle(3), (0, 1))
    with pytest.raises(SimplicialError):
        SimplicialComplex.from_simplices(2, [(0, 2)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_functoriality(seed):
    rng = random.Random(seed)
    a, b, c = (rng.randint(1, 2) for _ in range(3))
    rows1 = [[rng.randint(-1, 1) for _ in range(a)] for _ in range(b)]
    rows2 = [[rng.randint(-1, 1) for _ in range(b)] for _ in range(c)]
    f = bld.matrix_map([13] * a, [6] * b, rows1)
    g = bld.matrix_map([6] * b, [3] * c, rows2)
    for fld in (QQ, GF5):
        assert induced_map(f.then(g), 1, fld) == induced_map(g, 1, fld) @ induced_map(f, 1, fld)
