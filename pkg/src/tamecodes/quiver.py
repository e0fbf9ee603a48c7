"""Representations of the cyclic zigzag quiver and of the infinite line zigzag.

Vertex numbering: critical vertices are even (``V_{2i}``), regular vertices
are odd (``V_{2i-1}``, ``V_{2i+1}``). The arrows are
``alpha_i: V_{2i-1} -> V_{2i}`` and ``beta_i: V_{2i+1} -> V_{2i}``. On the
circle with ``m`` critical indices, vertex ``2m+1`` is vertex ``1``.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from dataclasses import field as dc_field
from typing import Union

from .canonical import EndoCanonicalForm, canonical_form
from .field import FieldSpec
from .linalg import MatrixF, Subspace, image, inverse, is_invertible, nullspace, preimage, quotient, rank, section

KINDS = ("T1", "T2", "T3", "T4")


class DecompositionError(RuntimeError):
    """Two independent routes to the same decomposition disagreed."""


@dataclass(frozen=True, order=True)
class BarCode:
    """An interval with integer endpoints and open/closed flags.

    For circle representations ``right`` is absolute: a code that wraps ``k``
    times around a circle with ``m`` critical indices has
    ``right = j + m*k`` with ``1 <= left <= m``.
    """

    left: int
    right: int
    left_closed: bool
    right_closed: bool

    def __post_init__(self) -> None:
        if self.left_closed and self.right_closed:
            if self.left > self.right:
                raise ValueError(f"closed code needs left <= right, got {self}")
        elif self.left >= self.right:
            raise ValueError(f"code with an open end needs left < right, got {self}")

    @classmethod
    def closed(cls, a: int, b: int) -> BarCode:
        return cls(a, b, True, True)

    @classmethod
    def open(cls, a: int, b: int) -> BarCode:
        return cls(a, b, False, False)

    @classmethod
    def closed_open(cls, a: int, b: int) -> BarCode:
        return cls(a, b, True, False)

    @classmethod
    def open_closed(cls, a: int, b: int) -> BarCode:
        return cls(a, b, False, True)

    @classmethod
    def parse(cls, text: str) -> BarCode:
        text = text.strip()
        a, b = text[1:-1].split(",")
        return cls(int(a), int(b), text[0] == "[", text[-1] == "]")

    @property
    def type(self) -> str:
        if self.left_closed and self.right_closed:
            return "closed"
        if not self.left_closed and not self.right_closed:
            return "open"
        return "mixed"

    @property
    def vertices(self) -> tuple[int, int]:
        """Inclusive span of quiver vertices covered by the code."""
        return (2 * self.left + (0 if self.left_closed else 1),
                2 * self.right - (0 if self.right_closed else 1))

    @classmethod
    def from_vertices(cls, p: int, q: int) -> BarCode:
        return cls(p // 2, (q + 1) // 2, p % 2 == 0, q % 2 == 0)

    def shifted(self, k: int) -> BarCode:
        return BarCode(self.left + k, self.right + k, self.left_closed, self.right_closed)

    def normalized(self, m: int) -> BarCode:
        """Translate by a multiple of m so that 1 <= left <= m."""
        return self.shifted(-m * ((self.left - 1) // m))

    def wraps(self, m: int) -> int:
        return (self.right - 1) // m - (self.left - 1) // m

    def __str__(self) -> str:
        return f"{'[' if self.left_closed else '('}{self.left},{self.right}{']' if self.right_closed else ')'}"


# ---------------------------------------------------------------- representations


def _check_shape(mat: MatrixF, rows: int, cols: int, name: str, fld: FieldSpec) -> None:
    if mat.field != fld:
        raise ValueError(f"{name} is over {mat.field}, expected {fld}")
    if mat.shape != (rows, cols):
        raise ValueError(f"{name} has shape {mat.shape}, expected {(rows, cols)}")


@dataclass(frozen=True)
class CircleRep:
    """``n[i-1] = dim V_{2i-1}``, ``r[i-1] = dim V_{2i}``; alpha and beta are 0-indexed lists."""

    field: FieldSpec
    n: tuple[int, ...]
    r: tuple[int, ...]
    alpha: tuple[MatrixF, ...]
    beta: tuple[MatrixF, ...]

    def __post_init__(self) -> None:
        m = len(self.n)
        if m < 1:
            raise ValueError("a circle representation needs m >= 1")
        if not (len(self.r) == len(self.alpha) == len(self.beta) == m):
            raise ValueError("n, r, alpha and beta must all have length m")
        if any(d < 0 for d in self.n + self.r):
            raise ValueError("dimensions must be nonnegative")
        for k in range(m):
            _check_shape(self.alpha[k], self.r[k], self.n[k], f"alpha_{k + 1}", self.field)
            _check_shape(self.beta[k], self.r[k], self.n[(k + 1) % m], f"beta_{k + 1}", self.field)

    @property
    def m(self) -> int:
        return len(self.n)

    def vkey(self, v: int) -> int:
        return (v - 1) % (2 * self.m) + 1

    def dim(self, v: int) -> int:
        v = self.vkey(v)
        return self.r[v // 2 - 1] if v % 2 == 0 else self.n[(v + 1) // 2 - 1]

    def alpha_map(self, i: int) -> MatrixF:
        return self.alpha[(i - 1) % self.m]

    def beta_map(self, i: int) -> MatrixF:
        return self.beta[(i - 1) % self.m]

    def indices(self) -> range:
        return range(1, self.m + 1)

    def vertices(self) -> range:
        return range(1, 2 * self.m + 1)

    def total_dim(self) -> int:
        return sum(self.n) + sum(self.r)

    def is_regular(self) -> bool:
        return all(is_invertible(a) for a in self.alpha) and all(is_invertible(b) for b in self.beta)

    def _rebuild(self, dims: dict[int, int], maps: dict[tuple[str, int], MatrixF]) -> CircleRep:
        m = self.m
        return CircleRep(self.field,
                         tuple(dims[2 * i - 1] for i in range(1, m + 1)),
                         tuple(dims[2 * i] for i in range(1, m + 1)),
                         tuple(maps[("alpha", i)] for i in range(1, m + 1)),
                         tuple(maps[("beta", i)] for i in range(1, m + 1)))

    def arrows(self) -> list[tuple[tuple[str, int], int, int, MatrixF]]:
        out = []
        for i in self.indices():
            out.append((("alpha", i), self.vkey(2 * i - 1), self.vkey(2 * i), self.alpha_map(i)))
            out.append((("beta", i), self.vkey(2 * i + 1), self.vkey(2 * i), self.beta_map(i)))
        return out


@dataclass(frozen=True)
class ZRep:
    """Finite-support representation of the line zigzag on the window ``lo..hi``.

    ``r`` lists ``dim V_{2i}`` for ``i = lo..hi``; ``n`` lists ``dim V_{2i-1}``
    for ``i = lo+1..hi``; ``alpha`` holds ``alpha_i`` for ``i = lo+1..hi`` and
    ``beta`` holds ``beta_i`` for ``i = lo..hi-1``. Everything else is zero.
    """

    field: FieldSpec
    lo: int
    hi: int
    n: tuple[int, ...]
    r: tuple[int, ...]
    alpha: tuple[MatrixF, ...]
    beta: tuple[MatrixF, ...]

    def __post_init__(self) -> None:
        w = self.hi - self.lo
        if w < 0:
            raise ValueError("window needs lo <= hi")
        if len(self.r) != w + 1 or len(self.n) != w or len(self.alpha) != w or len(self.beta) != w:
            raise ValueError("dimension and map lists do not match the window")
        if any(d < 0 for d in self.n + self.r):
            raise ValueError("dimensions must be nonnegative")
        for k in range(w):
            i = self.lo + 1 + k
            _check_shape(self.alpha[k], self.dim(2 * i), self.dim(2 * i - 1), f"alpha_{i}", self.field)
            i = self.lo + k
            _check_shape(self.beta[k], self.dim(2 * i), self.dim(2 * i + 1), f"beta_{i}", self.field)

    m = None

    def vkey(self, v: int) -> int:
        return v

    def dim(self, v: int) -> int:
        if v < 2 * self.lo or v > 2 * self.hi:
            return 0
        if v % 2 == 0:
            return self.r[v // 2 - self.lo]
        return self.n[(v + 1) // 2 - self.lo - 1]

    def alpha_map(self, i: int) -> MatrixF:
        if self.lo < i <= self.hi:
            return self.alpha[i - self.lo - 1]
        return MatrixF.zeros(self.field, self.dim(2 * i), self.dim(2 * i - 1))

    def beta_map(self, i: int) -> MatrixF:
        if self.lo <= i < self.hi:
            return self.beta[i - self.lo]
        return MatrixF.zeros(self.field, self.dim(2 * i), self.dim(2 * i + 1))

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def vertices(self) -> range:
        return range(2 * self.lo, 2 * self.hi + 1)

    def total_dim(self) -> int:
        return sum(self.n) + sum(self.r)

    def _rebuild(self, dims: dict[int, int], maps: dict[tuple[str, int], MatrixF]) -> ZRep:
        lo, hi = self.lo, self.hi
        return ZRep(self.field, lo, hi,
                    tuple(dims[2 * i - 1] for i in range(lo + 1, hi + 1)),
                    tuple(dims[2 * i] for i in range(lo, hi + 1)),
                    tuple(maps[("alpha", i)] for i in range(lo + 1, hi + 1)),
                    tuple(maps[("beta", i)] for i in range(lo, hi)))

    def arrows(self) -> list[tuple[tuple[str, int], int, int, MatrixF]]:
        out = []
        for i in range(self.lo + 1, self.hi + 1):
            out.append((("alpha", i), 2 * i - 1, 2 * i, self.alpha_map(i)))
        for i in range(self.lo, self.hi):
            out.append((("beta", i), 2 * i + 1, 2 * i, self.beta_map(i)))
        return out


Rep = Union[CircleRep, ZRep]


def zero_circle_rep(fld: FieldSpec, m: int) -> CircleRep:
    z = MatrixF.zeros(fld, 0, 0)
    return CircleRep(fld, (0,) * m, (0,) * m, (z,) * m, (z,) * m)


def zero_zrep(fld: FieldSpec, lo: int, hi: int) -> ZRep:
    z = MatrixF.zeros(fld, 0, 0)
    w = hi - lo
    return ZRep(fld, lo, hi, (0,) * w, (0,) * (w + 1), (z,) * w, (z,) * w)


# ---------------------------------------------------------------- block matrix M


def assemble_M(rep: Rep) -> MatrixF:
    """Block matrix from the odd vertices to the even ones: alpha_i diagonal, -beta_i off-diagonal."""
    fld = rep.field
    if isinstance(rep, CircleRep):
        m = rep.m
        blocks: dict[tuple[int, int], MatrixF] = {}
        for k in range(m):
            blocks[(k, k)] = rep.alpha[k]
        # m = 1 puts alpha_1 - beta_1 on the single block
        full = MatrixF.block(fld, rep.r, rep.n, blocks)
        minus_beta = MatrixF.block(fld, rep.r, rep.n, {(k, (k + 1) % m): -rep.beta[k] for k in range(m)})
        return full + minus_beta
    lo, hi = rep.lo, rep.hi
    rows = [rep.dim(2 * i) for i in range(lo, hi + 1)]
    cols = [rep.dim(2 * i - 1) for i in range(lo + 1, hi + 1)]
    blocks = {}
    for i in range(lo + 1, hi + 1):
        blocks[(i - lo, i - lo - 1)] = rep.alpha_map(i)
    for i in range(lo, hi):
        blocks[(i - lo, i - lo)] = -rep.beta_map(i)
    return MatrixF.block(fld, rows, cols, blocks)


def twist(rep: CircleRep, u) -> CircleRep:
    """Scale alpha_1 by the nonzero scalar u."""
    u = rep.field(u)
    if u == 0:
        raise ValueError("twist parameter must be nonzero")
    return CircleRep(rep.field, rep.n, rep.r, (rep.alpha[0].scale(u),) + rep.alpha[1:], rep.beta)


def dker_dcoker(rep: Rep) -> tuple[int, int]:
    mat = assemble_M(rep)
    rk = rank(mat)
    return mat.cols - rk, mat.rows - rk


# ---------------------------------------------------------------- local counts


def _ker(mat: MatrixF) -> Subspace:
    return nullspace(mat)


def local_counts(rep: Rep, i: int) -> tuple[int, int, int, int]:
    """Multiplicities of the codes (i,i+1), [i,i], (i,i+1], [i,i+1) computed from ranks."""
    a_i, b_i = rep.alpha_map(i), rep.beta_map(i)
    a_next, b_next = rep.alpha_map(i + 1), rep.beta_map(i + 1)
    c_oo = (_ker(b_i) & _ker(a_next)).dim
    im_a, im_b = image(a_i), image(b_i)
    c_cc = rep.dim(2 * i) - (im_a + im_b).dim
    im_b_next = image(b_next)
    c_oc = (im_b_next + image(a_next, _ker(b_i))).dim - im_b_next.dim
    c_co = (im_a + image(b_i, _ker(a_next))).dim - im_a.dim
    return c_oo, c_cc, c_oc, c_co


# ---------------------------------------------------------------- elementary transformations


@dataclass(frozen=True)
class TransformRecord:
    kind: str
    index: int
    eliminated: tuple[BarCode, ...]
    rule: str
    dim_before: int
    dim_after: int

    @property
    def changed(self) -> bool:
        return self.dim_after != self.dim_before


def _code(m: int | None, a: int, b: int, lc: bool, rc: bool) -> BarCode:
    code = BarCode(a, b, lc, rc)
    return code.normalized(m) if m else code


def _congruent(m: int | None, a: int, b: int) -> bool:
    return (a - b) % m == 0 if m else a == b


def shrink(kind: str, i: int, m: int | None, code: BarCode) -> BarCode | None:
    """Effect of one elementary transformation on a single code; None when eliminated."""
    lft, rr = code.left, code.right
    if kind == "T1" and not code.left_closed and _congruent(m, lft, i - 1):
        return None if rr == lft + 1 else _code(m, lft + 1, rr, False, code.right_closed)
    if kind == "T2" and not code.right_closed and _congruent(m, rr, i + 1):
        return None if rr == lft + 1 else BarCode(lft, rr - 1, code.left_closed, False)
    if kind == "T3" and code.left_closed and _congruent(m, lft, i):
        if (rr == lft and code.right_closed) or (rr == lft + 1 and not code.right_closed):
            return None
        return _code(m, lft + 1, rr, True, code.right_closed)
    if kind == "T4" and code.right_closed and _congruent(m, rr, i):
        if (lft == rr and code.left_closed) or (lft == rr - 1 and not code.left_closed):
            return None
        return BarCode(lft, rr - 1, code.left_closed, True)
    return code


_RULES = {
    "T1": "({i0},k}} -> ({i},k}}; drops ({i0},{i}) and ({i0},{i}]",
    "T2": "{{l,{i1}) -> {{l,{i}); drops ({i},{i1}) and [{i},{i1})",
    "T3": "[{i},k}} -> [{i1},k}}; drops [{i},{i}] and [{i},{i1})",
    "T4": "{{l,{i}] -> {{l,{i0}]; drops [{i},{i}] and ({i0},{i}]",
}


def _transform_ops(rep: Rep, kind: str, i: int) -> dict[int, tuple[str, Subspace]]:
    a_i, b_i = rep.alpha_map(i), rep.beta_map(i)
    if kind == "T1":
        k = _ker(rep.beta_map(i - 1))
        return {2 * i - 1: ("quot", k), 2 * i: ("quot", image(a_i, k))}
    if kind == "T2":
        k = _ker(rep.alpha_map(i + 1))
        return {2 * i + 1: ("quot", k), 2 * i: ("quot", image(b_i, k))}
    if kind == "T3":
        w = image(a_i)
        return {2 * i: ("sub", w), 2 * i + 1: ("sub", preimage(b_i, w))}
    if kind == "T4":
        w = image(b_i)
        return {2 * i: ("sub", w), 2 * i - 1: ("sub", preimage(a_i, w))}
    raise ValueError(f"unknown transformation {kind!r}")


def _apply_ops(rep: Rep, ops: dict[int, tuple[str, Subspace]]) -> Rep:
    fld = rep.field
    live = {}
    for v, (how, u) in ops.items():
        key = rep.vkey(v)
        if key not in rep.vertices():
            continue
        trivial = u.dim == 0 if how == "quot" else u.dim == u.ambient_dim
        if not trivial:
            live[key] = (how, u)

    def enter(v: int) -> MatrixF | None:
        if v not in live:
            return None
        how, u = live[v]
        return u.basis if how == "sub" else section(u.ambient_dim, u)

    def leave(v: int) -> MatrixF | None:
        if v not in live:
            return None
        how, u = live[v]
        if how == "sub":
            return MatrixF.identity(fld, u.ambient_dim).select_rows(u.pivots)
        return quotient(u.ambient_dim, u)

    dims = {}
    for v in rep.vertices():
        if v in live:
            how, u = live[v]
            dims[v] = u.dim if how == "sub" else u.ambient_dim - u.dim
        else:
            dims[v] = rep.dim(v)
    maps = {}
    for key, src, tgt, mat in rep.arrows():
        e, lv = enter(src), leave(tgt)
        if e is not None:
            mat = mat @ e
        if lv is not None:
            mat = lv @ mat
        maps[key] = mat
    return rep._rebuild(dims, maps)


def elementary(rep: Rep, kind: str, i: int) -> tuple[Rep, TransformRecord]:
    """Apply one of T1..T4 at critical index i and record the codes it removes."""
    if kind not in KINDS:
        raise ValueError(f"unknown transformation {kind!r}")
    m = rep.m
    before = local_counts(rep, i)
    prev = local_counts(rep, i - 1)
    c = lambda a, b, lc, rc, mult: [_code(m, a, b, lc, rc)] * mult
    if kind == "T1":
        gone = c(i - 1, i, False, False, prev[0]) + c(i - 1, i, False, True, prev[2])
    elif kind == "T2":
        gone = c(i, i + 1, False, False, before[0]) + c(i, i + 1, True, False, before[3])
    elif kind == "T3":
        gone = c(i, i, True, True, before[1]) + c(i, i + 1, True, False, before[3])
    else:
        gone = c(i, i, True, True, before[1]) + c(i - 1, i, False, True, prev[2])
    new = _apply_ops(rep, _transform_ops(rep, kind, i))
    rule = _RULES[kind].format(i=i, i0=i - 1, i1=i + 1)
    record = TransformRecord(kind, i, tuple(sorted(gone)), rule, rep.total_dim(), new.total_dim())
    return new, record


def apply_sequence(rep: Rep, steps: Iterable[tuple[str, int]]) -> tuple[Rep, list[TransformRecord]]:
    records = []
    for kind, i in steps:
        rep, rec = elementary(rep, kind, i)
        records.append(rec)
    return rep, records


def reduce_to_regular(rep: Rep) -> tuple[Rep, list[TransformRecord]]:
    """Sweep i over the indices applying T1(i)..T4(i) until a sweep changes nothing."""
    records = []
    while True:
        changed = False
        for i in rep.indices():
            for kind in KINDS:
                new, rec = elementary(rep, kind, i)
                if rec.changed:
                    records.append(rec)
                    rep = new
                    changed = True
        if not changed:
            return rep, records


# ---------------------------------------------------------------- regular part


def monodromy_of_regular(rep: CircleRep) -> MatrixF:
    """beta_m^-1 alpha_m ... beta_1^-1 alpha_1 on V_1."""
    if not rep.is_regular():
        raise ValueError("monodromy needs every alpha_i and beta_i invertible")
    t = MatrixF.identity(rep.field, rep.n[0])
    for k in range(rep.m):
        t = inverse(rep.beta[k]) @ rep.alpha[k] @ t
    return t


# ---------------------------------------------------------------- unrolling and interval multiplicities


def unroll(rep: CircleRep, lo: int, hi: int) -> ZRep:
    """Restrict the periodic lift of ``rep`` to critical indices ``lo..hi``."""
    if hi < lo:
        raise ValueError("window needs lo <= hi")
    return ZRep(rep.field, lo, hi,
                tuple(rep.dim(2 * i - 1) for i in range(lo + 1, hi + 1)),
                tuple(rep.dim(2 * i) for i in range(lo, hi + 1)),
                tuple(rep.alpha_map(i) for i in range(lo + 1, hi + 1)),
                tuple(rep.beta_map(i) for i in range(lo, hi)))


def _covering_counts(rep: ZRep, starts: Iterable[int]) -> dict[tuple[int, int], int]:
    """Number of interval summands containing vertex span [p, q], for each p in ``starts``.

    A subspace pair (A, B) is pushed along the zigzag: images under forward
    arrows, preimages under backward ones. A starts as V_p and B as 0; the
    count is dim(A + B) - dim(B).
    """
    fld = rep.field
    top = 2 * rep.hi
    out: dict[tuple[int, int], int] = {}
    for p in starts:
        if p < 2 * rep.lo or p > top:
            continue
        a = Subspace.full(fld, rep.dim(p))
        b = Subspace.zero(fld, rep.dim(p))
        q = p
        while True:
            total = (a + b).dim - b.dim
            out[(p, q)] = total
            if q == top or total == 0:
                break
            if q % 2 == 0:
                g = rep.beta_map(q // 2)
                a, b = preimage(g, a), preimage(g, b)
            else:
                f = rep.alpha_map((q + 1) // 2)
                a, b = image(f, a), image(f, b)
            q += 1
    return out


def _interval_multiplicities(rep: ZRep, starts: Sequence[int]) -> Counter:
    """Multiplicity of each exact vertex span [p, q] with p in ``starts``."""
    need = sorted(set(starts) | {p - 1 for p in starts})
    cover = _covering_counts(rep, need)
    top = 2 * rep.hi

    def full(p: int, q: int) -> int:
        if q > top or p < 2 * rep.lo:
            return 0
        return cover.get((p, q), 0)

    mult: Counter = Counter()
    for p in starts:
        for q in range(p, top + 1):
            k = full(p, q) - full(p - 1, q) - full(p, q + 1) + full(p - 1, q + 1)
            if k < 0:
                raise DecompositionError(f"negative multiplicity at span {(p, q)}")
            if k:
                mult[(p, q)] = k
    return mult


def _zrep_barcodes(rep: ZRep) -> list[BarCode]:
    starts = list(rep.vertices())
    mult = _interval_multiplicities(rep, starts)
    return sorted(code for (p, q), k in mult.items() for code in [BarCode.from_vertices(p, q)] * k)


def _circle_barcodes(rep: CircleRep) -> tuple[list[BarCode], int]:
    """Codes with 1 <= left <= m, plus the number of full-window intervals.

    A code wrapping k times contributes at least k to every vertex, so the
    smallest vertex dimension bounds k and fixes a large enough window.
    """
    m = rep.m
    dmin = min(rep.dim(v) for v in rep.vertices())
    hi = m * (dmin + 2) + 1
    lifted = unroll(rep, 0, hi)
    starts = list(range(2, 2 * m + 2))
    mult = _interval_multiplicities(lifted, starts)
    codes = []
    for (p, q), k in mult.items():
        if q >= 2 * hi:
            raise DecompositionError(f"interval starting at vertex {p} reaches the window edge")
        codes.extend([BarCode.from_vertices(p, q)] * k)
    jordan = _covering_counts(lifted, [0]).get((0, 2 * hi), 0)
    return sorted(codes), jordan


# ---------------------------------------------------------------- decomposition


@dataclass(frozen=True)
class Decomposition:
    field: FieldSpec
    m: int | None
    barcodes: tuple[BarCode, ...]
    monodromy: MatrixF | None
    canonical: EndoCanonicalForm | None
    transcript: tuple[TransformRecord, ...] = ()
    origins: tuple[tuple[BarCode, ...], ...] = ()
    window: tuple[int, int] | None = dc_field(default=None)

    def closed(self) -> list[BarCode]:
        return [c for c in self.barcodes if c.type == "closed"]

    def open(self) -> list[BarCode]:
        return [c for c in self.barcodes if c.type == "open"]

    def mixed(self) -> list[BarCode]:
        return [c for c in self.barcodes if c.type == "mixed"]

    def jordan_dim(self) -> int:
        return 0 if self.monodromy is None else self.monodromy.rows

    def cells_at(self, lam) -> int:
        return 0 if self.canonical is None else self.canonical.count_cells(lam)

    def to_json(self) -> dict:
        out = {
            "field": self.field.spec_json(),
            "barcodes": [str(c) for c in self.barcodes],
            "closed": len(self.closed()),
            "open": len(self.open()),
            "mixed": len(self.mixed()),
        }
        if self.m is not None:
            out["m"] = self.m
            out["monodromy"] = self.monodromy.to_json() if self.monodromy is not None else []
            out["canonical_form"] = self.canonical.to_json() if self.canonical is not None else None
        else:
            out["support"] = list(self.window) if self.window else None
        out["transcript"] = [
            {"kind": r.kind, "index": r.index, "eliminated": [str(c) for c in r.eliminated],
             "original": [str(c) for c in o], "rule": r.rule, "dim_before": r.dim_before,
             "dim_after": r.dim_after}
            for r, o in zip(self.transcript, self.origins)
        ]
        return out


def replay(codes: Sequence[BarCode], records: Sequence[TransformRecord], m: int | None
           ) -> tuple[list[tuple[BarCode, ...]], list[BarCode]]:
    """Push codes through a transcript; return the originals eliminated per record and survivors.

    Raises DecompositionError when a record's rank-based eliminations disagree
    with the codes predicted to vanish.
    """
    live = [(c, c) for c in codes]
    origins = []
    for rec in records:
        gone, kept = [], []
        for orig, cur in live:
            nxt = shrink(rec.kind, rec.index, m, cur)
            if nxt is None:
                gone.append((cur, orig))
            else:
                kept.append((orig, nxt))
        predicted = sorted(cur for cur, _ in gone)
        if predicted != sorted(rec.eliminated):
            raise DecompositionError(
                f"{rec.kind}({rec.index}) removed {[str(c) for c in rec.eliminated]} "
                f"but the codes predict {[str(c) for c in predicted]}")
        origins.append(tuple(sorted(orig for _, orig in gone)))
        live = kept
    return origins, [cur for _, cur in live]


def decompose(rep: Rep) -> Decomposition:
    """Bar codes and Jordan part of a representation.

    Bar codes come from interval multiplicities of the (unrolled) zigzag;
    the Jordan part from reducing to a regular representation by elementary
    transformations. Replaying the codes through the transformation
    transcript ties the two together.
    """
    terminal, records = reduce_to_regular(rep)
    if isinstance(rep, ZRep):
        codes = _zrep_barcodes(rep)
        if terminal.total_dim() != 0:
            raise DecompositionError("a finite-support zigzag did not reduce to zero")
        origins, left = replay(codes, records, None)
        if left:
            raise DecompositionError(f"codes {[str(c) for c in left]} survived every transformation")
        return Decomposition(rep.field, None, tuple(codes), None, None, tuple(records), tuple(origins),
                             (rep.lo, rep.hi))
    codes, jordan = _circle_barcodes(rep)
    if not terminal.is_regular():
        raise DecompositionError("reduction stopped at a representation that is not regular")
    mono = monodromy_of_regular(terminal)
    if jordan != mono.rows:
        raise DecompositionError(f"unrolled zigzag has {jordan} full intervals, monodromy has dimension {mono.rows}")
    origins, left = replay(codes, records, rep.m)
    if left:
        raise DecompositionError(f"codes {[str(c) for c in left]} survived every transformation")
    return Decomposition(rep.field, rep.m, tuple(codes), mono, canonical_form(mono),
                         tuple(records), tuple(origins))


# ---------------------------------------------------------------- indecomposables and rebuilding


def code_dims(code: BarCode, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Dimension vectors (n, r) of the indecomposable attached to a circle code."""
    p, q = code.vertices
    n, r = [0] * m, [0] * m
    for v in range(p, q + 1):
        key = (v - 1) % (2 * m) + 1
        if key % 2 == 0:
            r[key // 2 - 1] += 1
        else:
            n[(key + 1) // 2 - 1] += 1
    return tuple(n), tuple(r)


def _spiral(fld: FieldSpec, code: BarCode, vkey, vertices, arrows_of):
    p, q = code.vertices
    points: dict[int, list[int]] = {v: [] for v in vertices}
    for u in range(p, q + 1):
        points[vkey(u)].append(u)
    maps = {}
    for key, src, tgt, in_step in arrows_of():
        mat = [[fld.zero] * len(points[src]) for _ in points[tgt]]
        for col, u in enumerate(points[src]):
            w = u + in_step
            if p <= w <= q:
                mat[points[tgt].index(w)][col] = fld.one
        maps[key] = MatrixF(fld, len(points[tgt]), len(points[src]), tuple(tuple(row) for row in mat))
    return {v: len(points[v]) for v in vertices}, maps


def interval_rep(fld: FieldSpec, code: BarCode, m: int) -> CircleRep:
    """The indecomposable circle representation of a bar code (a spiral of basis vectors)."""
    if not 1 <= code.left <= m:
        raise ValueError("circle codes need 1 <= left <= m")
    vkey = lambda v: (v - 1) % (2 * m) + 1

    def arrows():
        for i in range(1, m + 1):
            yield ("alpha", i), vkey(2 * i - 1), vkey(2 * i), +1
            yield ("beta", i), vkey(2 * i + 1), vkey(2 * i), -1

    dims, maps = _spiral(fld, code, vkey, range(1, 2 * m + 1), arrows)
    return zero_circle_rep(fld, m)._rebuild(dims, maps)


def interval_zrep(fld: FieldSpec, code: BarCode, lo: int | None = None, hi: int | None = None) -> ZRep:
    lo = code.left if lo is None else lo
    hi = code.right if hi is None else hi
    p, q = code.vertices
    if p < 2 * lo or q > 2 * hi:
        raise ValueError("code does not fit in the window")

    def arrows():
        for i in range(lo + 1, hi + 1):
            yield ("alpha", i), 2 * i - 1, 2 * i, +1
        for i in range(lo, hi):
            yield ("beta", i), 2 * i + 1, 2 * i, -1

    dims, maps = _spiral(fld, code, lambda v: v, range(2 * lo, 2 * hi + 1), arrows)
    return zero_zrep(fld, lo, hi)._rebuild(dims, maps)


def jordan_rep(t: MatrixF, m: int) -> CircleRep:
    """Regular circle representation with alpha_1 = t and every other map the identity."""
    if not is_invertible(t):
        raise ValueError("Jordan part must be invertible")
    d = t.rows
    eye = MatrixF.identity(t.field, d)
    return CircleRep(t.field, (d,) * m, (d,) * m, (t,) + (eye,) * (m - 1), (eye,) * m)


def direct_sum(reps: Sequence[Rep]) -> Rep:
    if not reps:
        raise ValueError("direct sum of nothing")
    first = reps[0]
    fld = first.field
    if isinstance(first, CircleRep):
        if any(not isinstance(x, CircleRep) or x.m != first.m for x in reps):
            raise ValueError("summands must share the same m")
    else:
        if any(not isinstance(x, ZRep) or (x.lo, x.hi) != (first.lo, first.hi) for x in reps):
            raise ValueError("summands must share the same window")
    dims = {v: sum(x.dim(v) for x in reps) for v in first.vertices()}
    maps = {}
    per_rep = [{key: mat for key, _, _, mat in x.arrows()} for x in reps]
    for key, _, _, _ in first.arrows():
        maps[key] = MatrixF.block_diag(fld, [pr[key] for pr in per_rep])
    return first._rebuild(dims, maps)


def change_basis(rep: Rep, gauge: dict[int, MatrixF]) -> Rep:
    """Conjugate by invertible matrices g_v: each map f: s -> t becomes g_t f g_s^-1."""
    inv = {v: inverse(g) for v, g in gauge.items()}
    maps = {}
    for key, src, tgt, mat in rep.arrows():
        if src in inv:
            mat = mat @ inv[src]
        if tgt in gauge:
            mat = gauge[tgt] @ mat
        maps[key] = mat
    return rep._rebuild({v: rep.dim(v) for v in rep.vertices()}, maps)


def rebuild(decomp: Decomposition, lo: int | None = None, hi: int | None = None) -> Rep:
    """A representation with exactly the given decomposition."""
    fld = decomp.field
    if decomp.m is None:
        lo = decomp.window[0] if lo is None else lo
        hi = decomp.window[1] if hi is None else hi
        parts = [interval_zrep(fld, c, lo, hi) for c in decomp.barcodes]
        return direct_sum(parts) if parts else zero_zrep(fld, lo, hi)
    parts = [interval_rep(fld, c, decomp.m) for c in decomp.barcodes]
    if decomp.monodromy is not None and decomp.monodromy.rows:
        parts.append(jordan_rep(decomp.monodromy, decomp.m))
    return direct_sum(parts) if parts else zero_circle_rep(fld, decomp.m)


def truncation_barcodes(decomp: Decomposition, lo: int, hi: int) -> list[BarCode]:
    """Predicted codes of the window lo..hi of the periodic lift.

    Every translate of every code is intersected with the vertex span
    [2lo, 2hi]; each Jordan cell of size k contributes k copies of [lo, hi].
    """
    m = decomp.m
    a, b = 2 * lo, 2 * hi
    out = []
    for code in decomp.barcodes:
        p, q = code.vertices
        k0 = -((q - a) // (2 * m)) - 1
        k = k0
        while p + 2 * m * k <= b:
            s, t = max(p + 2 * m * k, a), min(q + 2 * m * k, b)
            if s <= t:
                out.append(BarCode.from_vertices(s, t))
            k += 1
    out.extend([BarCode.closed(lo, hi)] * decomp.jordan_dim())
    return sorted(out)
