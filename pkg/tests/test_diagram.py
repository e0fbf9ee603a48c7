import copy
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamecodes import samples
from tamecodes.diagram import (analyze, build_representation, census_homology, cross_validate, diagram_to_json,
                               fiber_dims, interval_dims, novikov_by_ranks, novikov_numbers, parse_diagram,
                               space_homology, truncation_dims)
from tamecodes.field import QQ, FieldSpec
from tamecodes.homology import betti
from tamecodes.io import ValidationError, load_json
from tamecodes.quiver import BarCode

GF2, GF5 = FieldSpec(2), FieldSpec(5)
TAU = 2 * math.pi


@pytest.fixture(scope="module")
def worked():
    d = samples.worked_example()
    return d, analyze(d)


# ---------------------------------------------------------------- building representations


def test_torus_representation():
    rep = build_representation(samples.torus(), 1)
    assert rep.n == (1,) and rep.r == (1,)
    assert rep.alpha[0].to_json() == [[1]] and rep.beta[0].to_json() == [[1]]


def test_klein_representation():
    rep = build_representation(samples.klein_bottle(), 1)
    assert rep.alpha[0].to_json() == [[-1]] and rep.beta[0].to_json() == [[1]]


def test_worked_diagram_reproduces_the_transcribed_matrices(worked_rho1, worked_rho0):
    d = samples.worked_example()
    assert build_representation(d, 1) == worked_rho1
    assert build_representation(d, 0) == worked_rho0


def test_real_kind_representation():
    rep = build_representation(samples.torus_height(), 1)
    assert (rep.lo, rep.hi) == (1, 4)
    assert rep.r == (0, 2, 2, 0) and rep.n == (1, 2, 1)


# ---------------------------------------------------------------- analyze


def test_worked_example_report(worked):
    d, report = worked
    assert report.decomposition(0).barcodes == ()
    assert report.decomposition(0).canonical.split_cells == ((1, 1),)
    assert sorted(report.codes(1)) == sorted(BarCode.parse(s) for s in ("(6,8]", "[2,3]", "(4,5)"))
    assert report.decomposition(1).canonical.split_cells == ((2, 2),)
    th = d.critical_angles
    expected = {(th[5], th[0] + TAU, "mixed"), (th[1], th[2], "closed"), (th[3], th[4], "open")}
    assert set(report.angle_codes(1)) == expected
    assert len(report.degrees) == 3  # fibers are graphs: degrees 0, 1, 2


def test_point_circle_report():
    report = analyze(samples.point_circle())
    assert report.codes(0) == []
    assert report.decomposition(0).canonical.split_cells == ((1, 1),)
    assert report.decomposition(1).jordan_dim() == 0


def test_klein_monodromy_depends_on_field():
    assert analyze(samples.klein_bottle(QQ)).decomposition(1).canonical.split_cells == ((-1, 1),)
    assert analyze(samples.klein_bottle(GF2)).decomposition(1).canonical.split_cells == ((1, 1),)


def test_torus_height_codes():
    report = analyze(samples.torus_height())
    assert sorted(report.codes(0)) == sorted([BarCode.closed(1, 4), BarCode.open(2, 3)])
    assert sorted(report.codes(1)) == sorted([BarCode.open(1, 4), BarCode.closed(2, 3)])
    assert report.codes(2) == []


# ---------------------------------------------------------------- total space homology


def test_torus_homology():
    report = analyze(samples.torus(GF5))
    assert [space_homology(report, r) for r in range(3)] == [1, 2, 1]
    assert [space_homology(report, r, 2) for r in range(3)] == [0, 0, 0]


def test_klein_homology():
    assert space_homology(analyze(samples.klein_bottle(QQ)), 1) == 1
    assert [space_homology(analyze(samples.klein_bottle(GF2)), r) for r in range(3)] == [1, 2, 1]


def test_torus_height_homology():
    report = analyze(samples.torus_height())
    assert [space_homology(report, r) for r in range(3)] == [1, 2, 1]
    assert [census_homology(report, r) for r in range(3)] == [1, 2, 1]


def test_twisted_census_on_worked_example(worked):
    _, report = worked
    for u in (1, 2, 3, QQ("1/2")):
        for r in range(3):
            assert space_homology(report, r, u) == census_homology(report, r, u)
    # twisting by 1/2 picks up the eigenvalue 2 cell
    assert space_homology(report, 1, QQ("1/2")) == 2


# ---------------------------------------------------------------- fiber dimensions


def test_fiber_dims_match_fiber_homology(worked):
    d, report = worked
    for x, fiber in zip(d.regular_angles, d.fibers_R):
        assert fiber_dims(report, x)[1] == betti(fiber, 1, QQ)
    for x, fiber in zip(d.critical_angles, d.fibers_X):
        assert fiber_dims(report, x)[1] == betti(fiber, 1, QQ)


def test_fiber_dims_at_named_angles(worked):
    d, report = worked
    assert fiber_dims(report, d.regular_angles[0])[1] == 2
    assert fiber_dims(report, d.regular_angles[6])[1] == 3
    assert fiber_dims(report, d.critical_angles[4])[1] == 2
    # periodic in the angle
    assert fiber_dims(report, d.critical_angles[4] + TAU) == fiber_dims(report, d.critical_angles[4])


def test_fiber_dims_away_from_codes(worked):
    _, report = worked
    assert all(fiber_dims(report, x)[0] == 1 for x in (0.1, 1.0, 3.3, 6.0))


# ---------------------------------------------------------------- Novikov numbers


def test_novikov_numbers(worked):
    _, report = worked
    assert novikov_numbers(report) == [0, 1, 1]
    assert novikov_by_ranks(report, 1) == 1
    assert novikov_numbers(analyze(samples.torus())) == [0, 0, 0]


def test_betti_minus_unit_cells_is_novikov(worked):
    _, report = worked
    for r in range(3):
        units = report.decomposition(r).cells_at(1) + report.decomposition(r - 1).cells_at(1)
        assert space_homology(report, r) - units == novikov_numbers(report)[r]


# ---------------------------------------------------------------- intervals


def test_interval_between_second_and_third_angles(worked):
    d, report = worked
    dims = interval_dims(report, d.critical_angles[1], d.critical_angles[2], 1)
    assert dims.total == 3
    assert truncation_dims(report, 2, 3, 1) == 3


def test_empty_interval_counts():
    report = analyze(samples.torus())
    dims = interval_dims(report, 1.0, 2.0, 2)
    assert (dims.total, dims.into_cover, dims.into_space) == (0, 0, 0)


def test_interval_rejects_reversed_window(worked):
    _, report = worked
    with pytest.raises(ValueError):
        interval_dims(report, 2.0, 1.0, 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_interval_counts_match_truncation_ranks(seed):
    rng = random.Random(seed)
    d = samples.random_bouquet_diagram(rng, rng.choice([QQ, GF2, GF5]))
    report = analyze(d)
    lo = rng.randint(-2, 3)
    hi = lo + rng.randint(0, 3 * d.m)
    r = rng.randint(0, 2)
    assert interval_dims(report, report.index_angle(lo), report.index_angle(hi), r).total == \
        truncation_dims(report, lo, hi, r)


# ---------------------------------------------------------------- cross-validation


@pytest.mark.parametrize("name", sorted(samples.ALL))
@pytest.mark.parametrize("p", [None, 2, 5])
def test_cross_validation_on_samples(name, p):
    d = samples.ALL[name](FieldSpec(p))
    failed = [c for c in cross_validate(d, analyze(d)) if not c.passed]
    assert not failed, failed


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_cross_validation_on_random_diagrams(seed):
    rng = random.Random(seed)
    d = samples.random_bouquet_diagram(rng, rng.choice([QQ, GF2, FieldSpec(3), GF5]))
    failed = [c for c in cross_validate(d, analyze(d)) if not c.passed]
    assert not failed, failed


# ---------------------------------------------------------------- input handling


def test_diagram_json_round_trip():
    for build in samples.ALL.values():
        d = build()
        assert parse_diagram(diagram_to_json(d)) == d


def test_bad_interleaving_rejected():
    obj = diagram_to_json(samples.worked_example())
    obj["regular_angles"][2] = obj["critical_angles"][0]
    with pytest.raises(ValidationError):
        parse_diagram(obj)


def test_last_regular_angle_must_pass_two_pi():
    obj = diagram_to_json(samples.torus())
    obj["regular_angles"] = [4.0]
    with pytest.raises(ValidationError):
        parse_diagram(obj)


@pytest.mark.parametrize("theta,t", [(0.0, 7.0), (-1.0, 7.0), (7.0, 8.0)])
def test_critical_angle_outside_one_turn_rejected(theta, t):
    obj = diagram_to_json(samples.torus())
    obj["critical_angles"], obj["regular_angles"] = [theta], [t]
    with pytest.raises(ValidationError):
        parse_diagram(obj)


def test_non_simplicial_map_rejected():
    obj = diagram_to_json(samples.torus())
    obj["maps_a"][0]["vertex_map"] = [0, 2, 4, 0, 2, 4]
    with pytest.raises(ValidationError):
        parse_diagram(obj)


def test_wrong_counts_rejected():
    obj = diagram_to_json(samples.worked_example())
    del obj["maps_b"][0]
    with pytest.raises(ValidationError):
        parse_diagram(obj)


def test_fixture_files_match_builders(fixture_path):
    for name, build in samples.ALL.items():
        assert parse_diagram(load_json(fixture_path(f"{name}.json"))) == build()


def test_field_override():
    obj = copy.deepcopy(diagram_to_json(samples.klein_bottle()))
    d = parse_diagram(obj, GF2)
    assert d.field == GF2
