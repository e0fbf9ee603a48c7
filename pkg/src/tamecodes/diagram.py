"""Level-set diagrams of real- and angle-valued maps and their invariants.

A diagram lists the critical fibers X_1..X_m, the regular fibers between
them, and the maps from each regular fiber to its two neighbours. For
``kind == "circle"`` regular fiber ``j`` (0-based) sits at angle
``regular_angles[j]`` between critical angles ``j`` and ``j+1``; the last one
sits past 2π and closes the loop. Map ``a_i`` goes from the regular fiber
just before critical angle ``i`` and ``b_i`` from the one just after.

For ``kind == "real"`` there are m-1 regular fibers, ``maps_a`` holds
``a_2..a_m`` and ``maps_b`` holds ``b_1..b_{m-1}``.
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from . import config as cfg
from .field import FieldSpec
from .homology import SimplicialComplex, SimplicialError, SimplicialMap, homology_basis, induced_map
from .io import ValidationError, parse_field
from .linalg import MatrixF, rank
from .quiver import (
    BarCode,
    CircleRep,
    Decomposition,
    DecompositionError,
    Rep,
    ZRep,
    assemble_M,
    decompose,
    twist,
    unroll,
    zero_circle_rep,
    zero_zrep,
)
from .relation import regular_part, relation_from_cycle

TAU = 2 * math.pi
ANGLE_TOL = 1e-9


@dataclass(frozen=True)
class TameDiagram:
    kind: str
    field: FieldSpec
    critical_angles: tuple[float, ...]
    regular_angles: tuple[float, ...]
    fibers_X: tuple[SimplicialComplex, ...]
    fibers_R: tuple[SimplicialComplex, ...]
    maps_a: tuple[SimplicialMap, ...]
    maps_b: tuple[SimplicialMap, ...]

    def __post_init__(self) -> None:
        m = len(self.critical_angles)
        if self.kind not in ("circle", "real"):
            raise ValidationError(f"diagram kind must be 'circle' or 'real', got {self.kind!r}")
        if m < 1:
            raise ValidationError("a diagram needs at least one critical value")
        nreg = m if self.kind == "circle" else m - 1
        counts = {"fibers_X": (len(self.fibers_X), m), "regular_angles": (len(self.regular_angles), nreg),
                  "fibers_R": (len(self.fibers_R), nreg), "maps_a": (len(self.maps_a), nreg),
                  "maps_b": (len(self.maps_b), nreg)}
        for name, (got, want) in counts.items():
            if got != want:
                raise ValidationError(f"'{name}' has {got} entries, expected {want}")
        th, ts = self.critical_angles, self.regular_angles
        for i in range(m - 1):
            if not th[i] < ts[i] < th[i + 1]:
                raise ValidationError(f"regular angle {ts[i]} is not between {th[i]} and {th[i + 1]}")
        if self.kind == "circle":
            if not (0 < th[0] and th[-1] <= TAU + ANGLE_TOL):
                raise ValidationError("critical angles must lie in (0, 2π]")
            if not (max(TAU, th[-1]) < ts[-1] < th[0] + TAU):
                raise ValidationError(f"last regular angle {ts[-1]} must lie in (2π, θ_1 + 2π)")
        for i in range(1, m + 1):
            a, b = self.map_a(i), self.map_b(i)
            if a is not None and (a.source != self.regular_before(i) or a.target != self.fibers_X[i - 1]):
                raise ValidationError(f"a_{i} does not go from the regular fiber before X_{i} to X_{i}")
            if b is not None and (b.source != self.regular_after(i) or b.target != self.fibers_X[i - 1]):
                raise ValidationError(f"b_{i} does not go from the regular fiber after X_{i} to X_{i}")

    @property
    def m(self) -> int:
        return len(self.critical_angles)

    def regular_before(self, i: int) -> SimplicialComplex | None:
        if self.kind == "circle":
            return self.fibers_R[(i - 2) % self.m]
        return self.fibers_R[i - 2] if i >= 2 else None

    def regular_after(self, i: int) -> SimplicialComplex | None:
        if self.kind == "circle":
            return self.fibers_R[i - 1]
        return self.fibers_R[i - 1] if i <= self.m - 1 else None

    def map_a(self, i: int) -> SimplicialMap | None:
        if self.kind == "circle":
            return self.maps_a[i - 1]
        return self.maps_a[i - 2] if i >= 2 else None

    def map_b(self, i: int) -> SimplicialMap | None:
        if self.kind == "circle":
            return self.maps_b[i - 1]
        return self.maps_b[i - 1] if i <= self.m - 1 else None

    def max_fiber_dim(self) -> int:
        return max(k.dimension for k in self.fibers_X + self.fibers_R)

    def with_field(self, fld: FieldSpec) -> TameDiagram:
        return TameDiagram(self.kind, fld, self.critical_angles, self.regular_angles, self.fibers_X,
                           self.fibers_R, self.maps_a, self.maps_b)


# ---------------------------------------------------------------- JSON


def parse_complex(obj: Any, name: str) -> SimplicialComplex:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ValidationError(f"{name}: complex needs 'vertices' and 'simplices'")
    n = obj["vertices"]
    simplices = obj.get("simplices", [])
    if isinstance(n, bool) or not isinstance(n, int) or not isinstance(simplices, list):
        raise ValidationError(f"{name}: malformed complex")
    try:
        return SimplicialComplex.from_simplices(n, simplices)
    except (SimplicialError, TypeError) as exc:
        raise ValidationError(f"{name}: {exc}") from exc


def _parse_map(obj: Any, source: SimplicialComplex, target: SimplicialComplex, name: str) -> SimplicialMap:
    if not isinstance(obj, dict) or not isinstance(obj.get("vertex_map"), list):
        raise ValidationError(f"{name}: map needs a 'vertex_map' list")
    try:
        return SimplicialMap(source, target, tuple(obj["vertex_map"]))
    except SimplicialError as exc:
        raise ValidationError(f"{name}: {exc}") from exc


def parse_diagram(obj: Any, field: FieldSpec | None = None) -> TameDiagram:
    if not isinstance(obj, dict):
        raise ValidationError("diagram must be a JSON object")
    kind = obj.get("kind", "circle")
    fld = field if field is not None else parse_field(obj.get("field", "Q"))
    try:
        theta = tuple(float(x) for x in obj["critical_angles"])
        ts = tuple(float(x) for x in obj["regular_angles"])
        xs = tuple(parse_complex(c, f"fibers_X[{k}]") for k, c in enumerate(obj["fibers_X"]))
        rs = tuple(parse_complex(c, f"fibers_R[{k}]") for k, c in enumerate(obj["fibers_R"]))
        raw_a, raw_b = obj["maps_a"], obj["maps_b"]
    except KeyError as exc:
        raise ValidationError(f"diagram is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed diagram: {exc}") from exc
    m = len(theta)
    if not isinstance(raw_a, list) or not isinstance(raw_b, list):
        raise ValidationError("'maps_a' and 'maps_b' must be lists")
    nreg = m if kind == "circle" else m - 1
    if len(rs) != nreg or len(xs) != m or len(raw_a) != nreg or len(raw_b) != nreg:
        raise ValidationError(f"expected {m} critical fibers and {nreg} regular fibers and maps of each kind")
    maps_a, maps_b = [], []
    for k in range(nreg):
        if kind == "circle":
            i = k + 1
            src_a = rs[(i - 2) % m]
        else:
            i = k + 2
            src_a = rs[i - 2]
        maps_a.append(_parse_map(raw_a[k], src_a, xs[i - 1], f"a_{i}"))
        maps_b.append(_parse_map(raw_b[k], rs[k], xs[k], f"b_{k + 1}"))
    return TameDiagram(kind, fld, theta, ts, xs, rs, tuple(maps_a), tuple(maps_b))


def diagram_to_json(d: TameDiagram) -> dict:
    return {
        "kind": d.kind,
        "field": d.field.spec_json(),
        "critical_angles": list(d.critical_angles),
        "regular_angles": list(d.regular_angles),
        "fibers_X": [k.to_json() for k in d.fibers_X],
        "fibers_R": [k.to_json() for k in d.fibers_R],
        "maps_a": [{"vertex_map": list(f.vertex_map)} for f in d.maps_a],
        "maps_b": [{"vertex_map": list(f.vertex_map)} for f in d.maps_b],
    }


# ---------------------------------------------------------------- representations per degree


def build_representation(d: TameDiagram, r: int) -> Rep:
    """Homology of the fibers in degree r with the induced maps."""
    fld = d.field
    hdim = lambda k: homology_basis(k, r, fld).dim
    m = d.m
    if d.kind == "circle":
        n = tuple(hdim(d.regular_before(i)) for i in range(1, m + 1))
        rr = tuple(hdim(x) for x in d.fibers_X)
        alpha = tuple(induced_map(d.map_a(i), r, fld) for i in range(1, m + 1))
        beta = tuple(induced_map(d.map_b(i), r, fld) for i in range(1, m + 1))
        return CircleRep(fld, n, rr, alpha, beta)
    n = tuple(hdim(d.regular_before(i)) for i in range(2, m + 1))
    rr = tuple(hdim(x) for x in d.fibers_X)
    alpha = tuple(induced_map(d.map_a(i), r, fld) for i in range(2, m + 1))
    beta = tuple(induced_map(d.map_b(i), r, fld) for i in range(1, m))
    return ZRep(fld, 1, m, n, rr, alpha, beta)


# ---------------------------------------------------------------- report


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    rep: Rep
    decomposition: Decomposition

    def count(self, kind: str) -> int:
        return sum(1 for c in self.decomposition.barcodes if c.type == kind)

    def unit_cells(self, lam=1) -> int:
        return self.decomposition.cells_at(lam)


@dataclass(frozen=True)
class InvariantReport:
    diagram: TameDiagram
    degrees: tuple[DegreeReport, ...]

    @property
    def kind(self) -> str:
        return self.diagram.kind

    @property
    def field(self) -> FieldSpec:
        return self.diagram.field

    @property
    def m(self) -> int:
        return self.diagram.m

    @property
    def top_degree(self) -> int:
        return len(self.degrees) - 1

    def rep(self, r: int) -> Rep:
        if 0 <= r < len(self.degrees):
            return self.degrees[r].rep
        if self.kind == "circle":
            return zero_circle_rep(self.field, self.m)
        return zero_zrep(self.field, 1, self.m)

    def decomposition(self, r: int) -> Decomposition:
        if 0 <= r < len(self.degrees):
            return self.degrees[r].decomposition
        return decompose(self.rep(r))

    def codes(self, r: int, kind: str | None = None) -> list[BarCode]:
        return [c for c in self.decomposition(r).barcodes if kind is None or c.type == kind]

    def index_angle(self, j: int) -> float:
        """Angle (or value) of lifted critical index j."""
        theta = self.diagram.critical_angles
        if self.kind == "real":
            if not 1 <= j <= self.m:
                raise ValueError(f"critical index {j} is outside 1..{self.m}")
            return theta[j - 1]
        m = self.m
        i = (j - 1) % m + 1
        return theta[i - 1] + TAU * ((j - i) // m)

    def angle_codes(self, r: int) -> list[tuple[float, float, str]]:
        return [(self.index_angle(c.left), self.index_angle(c.right), c.type) for c in self.codes(r)]

    def position(self, x: float) -> int:
        """Lifted vertex of a value: 2j at critical index j, 2j+1 strictly between j and j+1."""
        theta = self.diagram.critical_angles
        m = self.m
        if self.kind == "real":
            j = sum(1 for t in theta if t <= x + ANGLE_TOL)
            if j and abs(theta[j - 1] - x) <= ANGLE_TOL:
                return 2 * j
            return 2 * j + 1
        k = math.floor((x - theta[0] + ANGLE_TOL) / TAU)
        y = x - TAU * k
        i = max(q for q in range(1, m + 1) if theta[q - 1] <= y + ANGLE_TOL)
        j = i + m * k
        return 2 * j if abs(theta[i - 1] - y) <= ANGLE_TOL else 2 * j + 1


def analyze(d: TameDiagram) -> InvariantReport:
    """Representations and decompositions in degrees 0 .. max fiber dimension + 1."""
    out = []
    for r in range(d.max_fiber_dim() + 2):
        rep = build_representation(d, r)
        out.append(DegreeReport(r, rep, decompose(rep)))
    return InvariantReport(d, tuple(out))


def _translates_containing(code: BarCode, v: int, m: int | None) -> int:
    p, q = code.vertices
    if m is None:
        return 1 if p <= v <= q else 0
    period = 2 * m
    return max(0, math.floor((q - v) / period) - math.ceil((p - v) / period) + 1)


def fiber_dims(report: InvariantReport, x: float) -> dict[int, int]:
    """Homology dimension of the fiber over x in every degree, from bar codes and Jordan cells."""
    v = report.position(x)
    m = report.m if report.kind == "circle" else None
    out = {}
    for r in range(len(report.degrees)):
        dec = report.decomposition(r)
        out[r] = sum(_translates_containing(c, v, m) for c in dec.barcodes) + dec.jordan_dim()
    return out


def _twisted_counts(rep: Rep, u) -> tuple[int, int]:
    if isinstance(rep, CircleRep):
        rep = twist(rep, u)
    mat = assemble_M(rep)
    rk = rank(mat)
    return mat.cols - rk, mat.rows - rk


def space_homology(report: InvariantReport, r: int, u=1) -> int:
    """dim H_r of the total space (twisted by u for circle diagrams) from ranks of the block matrices."""
    _, coker = _twisted_counts(report.rep(r), u)
    ker, _ = _twisted_counts(report.rep(r - 1), u)
    return coker + ker


def census_homology(report: InvariantReport, r: int, u=1) -> int:
    """The same dimension from bar codes and Jordan cells with eigenvalue 1/u."""
    total = len(report.codes(r, "closed")) + len(report.codes(r - 1, "open"))
    if report.kind == "circle":
        lam = report.field.inv(report.field(u))
        total += report.decomposition(r).cells_at(lam) + report.decomposition(r - 1).cells_at(lam)
    return total


def betti_numbers(report: InvariantReport) -> list[int]:
    return [space_homology(report, r) for r in range(len(report.degrees))]


def novikov_numbers(report: InvariantReport) -> list[int]:
    """Closed r-codes plus open (r-1)-codes, per degree."""
    return [len(report.codes(r, "closed")) + len(report.codes(r - 1, "open")) for r in range(len(report.degrees))]


def _generic_twist(report: InvariantReport, r: int):
    """A nonzero u such that 1/u is not an eigenvalue in degrees r and r-1, or None."""
    fld = report.field
    bad = set()
    for deg in (r, r - 1):
        dec = report.decomposition(deg)
        if dec.canonical is not None:
            bad.update(lam for lam, _ in dec.canonical.split_cells)
    limit = fld.p if fld.p is not None else len(bad) + 2
    for cand in range(1, limit):
        u = fld(cand)
        if fld.inv(u) not in bad:
            return u
    return None


def novikov_by_ranks(report: InvariantReport, r: int) -> int | None:
    """N_r as twisted homology at a twist avoiding every eigenvalue; None if the field is too small."""
    u = _generic_twist(report, r)
    return None if u is None else space_homology(report, r, u)


def module_summary(report: InvariantReport) -> list[dict]:
    """Homology of the infinite cyclic cover: free rank N_r plus the torsion part given by the monodromy."""
    out = []
    for r, nr in enumerate(novikov_numbers(report)):
        dec = report.decomposition(r)
        out.append({"degree": r, "free_rank": nr, "torsion_dim": dec.jordan_dim(),
                    "torsion": dec.canonical.to_json() if dec.canonical else None})
    return out


@dataclass(frozen=True)
class IntervalDims:
    total: int
    into_cover: int
    into_space: int


def interval_dims(report: InvariantReport, a: float, b: float, r: int) -> IntervalDims:
    """Homology of the preimage of [a, b] in the infinite cyclic cover and the ranks of its two maps."""
    if b < a:
        raise ValueError("interval needs a <= b")
    va, vb = report.position(a), report.position(b)
    m = report.m if report.kind == "circle" else None
    period = 2 * m if m else None

    def translates(code: BarCode):
        p, q = code.vertices
        if period is None:
            yield p, q
            return
        k = math.floor((va - q) / period)
        while p + period * k <= vb:
            yield p + period * k, q + period * k
            k += 1

    closed_meet = 0
    any_closed_meet = 0
    closed_codes_meeting = 0
    for code in report.codes(r):
        hit_any = False
        for p, q in translates(code):
            s, t = max(p, va), min(q, vb)
            if s > t:
                continue
            if (s == va or s % 2 == 0) and (t == vb or t % 2 == 0):
                closed_meet += 1
            if code.type == "closed":
                any_closed_meet += 1
                hit_any = True
        closed_codes_meeting += hit_any
    open_inside = 0
    open_codes_inside = 0
    for code in report.codes(r - 1, "open"):
        inside = [1 for p, q in translates(code) if va <= p - 1 and q + 1 <= vb]
        open_inside += len(inside)
        open_codes_inside += bool(inside)
    dec = report.decomposition(r)
    jordan = dec.jordan_dim()
    unit = dec.cells_at(1) if dec.canonical is not None else 0
    return IntervalDims(closed_meet + open_inside + jordan,
                        any_closed_meet + open_inside + jordan,
                        closed_codes_meeting + open_codes_inside + unit)


def truncation_dims(report: InvariantReport, lo: int, hi: int, r: int) -> int:
    """Homology of the preimage of [θ_lo, θ_hi] from ranks of the unrolled block matrices."""
    def counts(rep: Rep) -> tuple[int, int]:
        if isinstance(rep, CircleRep):
            rep = unroll(rep, lo, hi)
        else:
            rep = _window(rep, lo, hi)
        mat = assemble_M(rep)
        rk = rank(mat)
        return mat.cols - rk, mat.rows - rk

    return counts(report.rep(r))[1] + counts(report.rep(r - 1))[0]


def _window(rep: ZRep, lo: int, hi: int) -> ZRep:
    return ZRep(rep.field, lo, hi,
                tuple(rep.dim(2 * i - 1) for i in range(lo + 1, hi + 1)),
                tuple(rep.dim(2 * i) for i in range(lo, hi + 1)),
                tuple(rep.alpha_map(i) for i in range(lo + 1, hi + 1)),
                tuple(rep.beta_map(i) for i in range(lo, hi)))


# ---------------------------------------------------------------- cross-validation


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _sample_twists(fld: FieldSpec) -> list:
    if fld.p is None:
        return [fld(1), fld(2), fld(-1)]
    return sorted({fld(u) for u in (1, 2, fld.p - 1)} - {fld.zero})


def cross_validate(d: TameDiagram, report: InvariantReport, degrees: Sequence[int] | None = None) -> list[Check]:
    """Independent routes to the same numbers, each reported as a named check."""
    checks: list[Check] = []
    degrees = range(len(report.degrees)) if degrees is None else degrees
    fld = report.field
    circle = report.kind == "circle"
    for r in degrees:
        rep, dec = report.rep(r), report.decomposition(r)
        if circle:
            reg = regular_part(relation_from_cycle(rep))
            same = reg.canonical_form.invariant_factors == dec.canonical.invariant_factors
            checks.append(Check(f"monodromy equals regular part of the fiber relation (degree {r})", same,
                                f"quiver {[str(p) for p in dec.canonical.invariant_factors]}, "
                                f"relation {[str(p) for p in reg.canonical_form.invariant_factors]}"))
            for u in _sample_twists(fld):
                ker, coker = _twisted_counts(rep, u)
                lam = fld.inv(u)
                want_c = len(dec.closed()) + dec.cells_at(lam)
                want_k = len(dec.open()) + dec.cells_at(lam)
                checks.append(Check(f"kernel/cokernel census, twist {fld.to_json(u)} (degree {r})",
                                    ker == want_k and coker == want_c,
                                    f"ranks give ker {ker}, coker {coker}; codes give {want_k}, {want_c}"))
        else:
            ker, coker = _twisted_counts(rep, 1)
            checks.append(Check(f"kernel/cokernel census (degree {r})",
                                ker == len(dec.open()) and coker == len(dec.closed()),
                                f"ranks give ker {ker}, coker {coker}; codes give {len(dec.open())}, "
                                f"{len(dec.closed())}"))
        # fiber dimensions at every vertex of one period
        verts = rep.vertices() if circle else range(2, 2 * report.m + 1)
        m = report.m if circle else None
        bad = []
        for v in verts:
            want = sum(_translates_containing(c, v, m) for c in dec.barcodes) + dec.jordan_dim()
            if want != rep.dim(v):
                bad.append((v, rep.dim(v), want))
        checks.append(Check(f"fiber dimensions from codes (degree {r})", not bad,
                            f"mismatches (vertex, actual, from codes): {bad}" if bad else ""))
        got, want = space_homology(report, r), census_homology(report, r)
        checks.append(Check(f"total homology by ranks equals code census (degree {r})", got == want,
                            f"{got} vs {want}"))
        if circle:
            for u in _sample_twists(fld):
                got, want = space_homology(report, r, u), census_homology(report, r, u)
                checks.append(Check(f"twisted homology by ranks equals census, twist {fld.to_json(u)} (degree {r})",
                                    got == want, f"{got} vs {want}"))
            nr = novikov_numbers(report)[r]
            units = report.decomposition(r).cells_at(1) + report.decomposition(r - 1).cells_at(1)
            beta = space_homology(report, r)
            checks.append(Check(f"Betti minus unit Jordan cells equals Novikov number (degree {r})",
                                beta - units == nr, f"{beta} - {units} vs {nr}"))
            by_ranks = novikov_by_ranks(report, r)
            if by_ranks is not None:
                checks.append(Check(f"Novikov number by generic twist (degree {r})", by_ranks == nr,
                                    f"{by_ranks} vs {nr}"))
        conf = cfg.configuration(report, r)
        expect = novikov_numbers(report)[r] if circle else space_homology(report, r)
        checks.append(Check(f"configuration size (degree {r})", len(conf) == expect, f"{len(conf)} vs {expect}"))
        poly = cfg.polynomial(conf)
        err = cfg.root_error(poly, conf)
        checks.append(Check(f"configuration polynomial roots (degree {r})", bool(err <= cfg.TOLERANCE),
                            f"max relative error {err:.3g}"))
        # intervals between critical values, one period long at most
        span = report.m if circle else report.m - 1
        bad = []
        for lo in range(1, report.m + 1):
            for hi in range(lo, min(lo + span, report.m * 2 if circle else report.m) + 1):
                a, b = report.index_angle(lo), report.index_angle(hi)
                got = interval_dims(report, a, b, r).total
                want = truncation_dims(report, lo, hi, r)
                if got != want:
                    bad.append((lo, hi, got, want))
        checks.append(Check(f"interval homology from codes equals truncation ranks (degree {r})", not bad,
                            f"mismatches (lo, hi, codes, ranks): {bad}" if bad else ""))
    return checks


def report_to_json(report: InvariantReport, checks: Sequence[Check] | None = None, twist_u=None) -> dict:
    circle = report.kind == "circle"
    d = report.diagram
    degrees = []
    nov = novikov_numbers(report) if circle else None
    samples = sorted(set(d.critical_angles) | set(d.regular_angles))
    dims_at = {x: fiber_dims(report, x) for x in samples}
    for entry in report.degrees:
        r = entry.degree
        dec = entry.decomposition
        conf = cfg.configuration(report, r)
        item = {
            "degree": r,
            "dims": {"odd": list(entry.rep.n), "even": list(entry.rep.r)},
            "barcodes": [{"code": str(c), "type": c.type, "angles": [report.index_angle(c.left),
                                                                     report.index_angle(c.right)]}
                         for c in dec.barcodes],
            "betti": space_homology(report, r),
            "fiber_dims": [{"at": x, "dim": dims_at[x][r]} for x in samples],
            "configuration": cfg.to_json(conf),
        }
        if circle:
            item["monodromy"] = dec.canonical.to_json()
            item["monodromy_matrix"] = dec.monodromy.to_json()
            item["novikov"] = nov[r]
            if twist_u is not None:
                item["twisted_homology"] = {"u": report.field.to_json(report.field(twist_u)),
                                            "dim": space_homology(report, r, twist_u)}
        degrees.append(item)
    out = {
        "kind": report.kind,
        "field": report.field.spec_json(),
        "m": report.m,
        "critical_angles": list(d.critical_angles),
        "regular_angles": list(d.regular_angles),
        "degrees": degrees,
        "betti": betti_numbers(report),
    }
    if circle:
        out["novikov"] = nov
        out["cover_homology"] = module_summary(report)
    if checks is not None:
        out["checks"] = [c.to_json() for c in checks]
        out["all_checks_passed"] = all(c.passed for c in checks)
    return out


__all__ = [
    "Check",
    "DecompositionError",
    "DegreeReport",
    "IntervalDims",
    "InvariantReport",
    "MatrixF",
    "TameDiagram",
    "analyze",
    "betti_numbers",
    "build_representation",
    "census_homology",
    "cross_validate",
    "diagram_to_json",
    "fiber_dims",
    "interval_dims",
    "module_summary",
    "novikov_by_ranks",
    "novikov_numbers",
    "parse_complex",
    "parse_diagram",
    "report_to_json",
    "space_homology",
    "truncation_dims",
]
