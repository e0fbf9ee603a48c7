"""Linear relations R ⊆ V × W and the regular part of a square relation."""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .canonical import EndoCanonicalForm, canonical_form
from .field import FieldSpec
from .linalg import MatrixF, Subspace, image, nullspace, preimage, quotient
from .quiver import CircleRep


class RelationError(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearRelation:
    """A subspace of V ⊕ W; coordinates of V come first."""

    field: FieldSpec
    dim_src: int
    dim_dst: int
    space: Subspace

    def __post_init__(self) -> None:
        if self.space.ambient_dim != self.dim_src + self.dim_dst:
            raise ValueError("relation space has the wrong ambient dimension")

    @classmethod
    def span(cls, fld: FieldSpec, dim_src: int, dim_dst: int, pairs: Sequence[tuple[Sequence, Sequence]]
             ) -> LinearRelation:
        return cls(fld, dim_src, dim_dst,
                   Subspace.span(fld, dim_src + dim_dst, [tuple(v) + tuple(w) for v, w in pairs]))

    @property
    def dim(self) -> int:
        return self.space.dim

    def _halves(self) -> tuple[MatrixF, MatrixF]:
        b = self.space.basis
        n = self.dim_src
        return (b.select_rows(range(n)), b.select_rows(range(n, n + self.dim_dst)))

    def contains(self, v: Sequence, w: Sequence) -> bool:
        return self.space.contains(tuple(v) + tuple(w))

    def image_of(self, u: Subspace) -> Subspace:
        """{w : v R w for some v in u}."""
        x, y = self._halves()
        return image(y, preimage(x, u))

    def preimage_of(self, u: Subspace) -> Subspace:
        """{v : v R w for some w in u}."""
        x, y = self._halves()
        return image(x, preimage(y, u))

    def __repr__(self) -> str:
        return f"LinearRelation<{self.field.name}, {self.dim_src}->{self.dim_dst}, dim {self.dim}>"


def graph(mat: MatrixF) -> LinearRelation:
    n = mat.cols
    eye = MatrixF.identity(mat.field, n)
    return LinearRelation.span(mat.field, n, mat.rows, list(zip(eye.columns(), mat.columns())))


def identity_relation(fld: FieldSpec, n: int) -> LinearRelation:
    return graph(MatrixF.identity(fld, n))


def dagger(rel: LinearRelation) -> LinearRelation:
    """w R† v iff v R w."""
    n = rel.dim_src
    return LinearRelation(rel.field, rel.dim_dst, rel.dim_src,
                          Subspace.span(rel.field, rel.space.ambient_dim,
                                        [v[n:] + v[:n] for v in rel.space.vectors()]))


def compose(s: LinearRelation, r: LinearRelation) -> LinearRelation:
    """S ∘ R: v relates to u when v R w and w S u for some w."""
    if r.dim_dst != s.dim_src:
        raise ValueError("relations are not composable")
    fld = r.field
    xr, yr = r._halves()
    xs, ys = s._halves()
    stacked = MatrixF.hstack(fld, r.dim_dst, [yr, -xs])
    pairs = []
    for c in nullspace(stacked).vectors():
        a, b = c[: r.dim], c[r.dim:]
        pairs.append((xr.apply(a), ys.apply(b)))
    return LinearRelation.span(fld, r.dim_src, s.dim_dst, pairs)


def power(rel: LinearRelation, k: int) -> LinearRelation:
    if rel.dim_src != rel.dim_dst:
        raise ValueError("powers need a square relation")
    out = identity_relation(rel.field, rel.dim_src)
    for _ in range(k):
        out = compose(rel, out)
    return out


@dataclass(frozen=True)
class RelationParts:
    dom: Subspace
    img: Subspace
    ker: Subspace
    mul: Subspace


def parts(rel: LinearRelation) -> RelationParts:
    x, y = rel._halves()
    return RelationParts(image(x), image(y), image(x, nullspace(y)), image(y, nullspace(x)))


@dataclass(frozen=True)
class RelationLimits:
    K_minus: Subspace
    K_plus: Subspace
    D_minus: Subspace
    D_plus: Subspace
    D: Subspace


def _stabilize(step, start: Subspace) -> Subspace:
    cur = start
    while True:
        nxt = step(cur)
        if nxt == cur:
            return cur
        cur = nxt


def limits(rel: LinearRelation) -> RelationLimits:
    """Stable kernels, multivalued parts, domains and images of the powers of R.

    K+ = union of ker(R^k), K- = union of mul(R^k), D+ = intersection of
    dom(R^k), D- = intersection of img(R^k), D = D- ∩ D+. Each chain is
    monotone and stops at the first repeat.
    """
    if rel.dim_src != rel.dim_dst:
        raise ValueError("limits need a square relation")
    fld, n = rel.field, rel.dim_src
    zero, full = Subspace.zero(fld, n), Subspace.full(fld, n)
    k_plus = _stabilize(rel.preimage_of, zero)
    k_minus = _stabilize(rel.image_of, zero)
    d_plus = _stabilize(rel.preimage_of, full)
    d_minus = _stabilize(rel.image_of, full)
    return RelationLimits(k_minus, k_plus, d_minus, d_plus, d_minus & d_plus)


def limit_law_checks(lim: RelationLimits) -> list[tuple[str, bool]]:
    """Structural identities every square relation satisfies, as named booleans."""
    km, kp, dm, dp, d = lim.K_minus, lim.K_plus, lim.D_minus, lim.D_plus, lim.D
    k_sum = km + kp
    reg_dim = d.dim - (k_sum & d).dim
    other = ((km + dp) & (dm + kp)).dim - k_sum.dim
    return [
        ("nesting", km.issubset(dm) and kp.issubset(dp)),
        ("D+ = D + K+", dp == d + kp),
        ("D- = K- + D", dm == km + d),
        ("K- ∩ D+ = K- ∩ K+", (km & dp) == (km & kp)),
        ("K- ∩ K+ = D- ∩ K+", (km & kp) == (dm & kp)),
        ("regular quotient dimensions agree", reg_dim == other),
    ]


@dataclass(frozen=True)
class RegularPart:
    dim: int
    map: MatrixF
    canonical_form: EndoCanonicalForm
    limits: RelationLimits
    relation: LinearRelation


def regular_part(rel: LinearRelation) -> RegularPart:
    """The automorphism induced on D / ((K- + K+) ∩ D)."""
    lim = limits(rel)
    fld = rel.field
    d = lim.D
    s = d.dim
    null = Subspace.span(fld, s, [d.coords(v) for v in ((lim.K_minus + lim.K_plus) & d).vectors()])
    proj = quotient(s, null)
    k = proj.rows
    restricted = rel.space & Subspace.span(fld, rel.space.ambient_dim,
                                           [v + (fld.zero,) * rel.dim_dst for v in d.vectors()]
                                           + [(fld.zero,) * rel.dim_src + v for v in d.vectors()])
    n = rel.dim_src
    pairs = [(proj.apply(d.coords(v[:n])), proj.apply(d.coords(v[n:]))) for v in restricted.vectors()]
    induced = LinearRelation.span(fld, k, k, pairs)
    pt = parts(induced)
    if not (pt.dom.dim == k and pt.img.dim == k and pt.ker.dim == 0 and pt.mul.dim == 0):
        raise RelationError("induced relation on the regular quotient is not an automorphism")
    basis = induced.space.basis
    tmat = basis.select_rows(range(k, 2 * k))
    return RegularPart(k, tmat, canonical_form(tmat), lim, induced)


def relation_from_pair(left: MatrixF, right: MatrixF) -> LinearRelation:
    """{(v, w) : left v = right w}."""
    if left.rows != right.rows:
        raise ValueError("both maps need the same target")
    return compose(dagger(graph(right)), graph(left))


def relation_from_cycle(rep: CircleRep) -> LinearRelation:
    """Walk once around the circle from V_1: graph(alpha_i), then the transpose relation of beta_i."""
    rel = identity_relation(rep.field, rep.n[0])
    for k in range(rep.m):
        rel = compose(graph(rep.alpha[k]), rel)
        rel = compose(dagger(graph(rep.beta[k])), rel)
    return rel
