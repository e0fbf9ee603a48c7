"""Univariate polynomials over a field and similarity invariants of endomorphisms."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import FieldSpec, Scalar
from .linalg import MatrixF


@dataclass(frozen=True)
class Poly:
    """Coefficients from the constant term upward, trailing zeros stripped."""

    field: FieldSpec
    coeffs: tuple

    @classmethod
    def make(cls, field: FieldSpec, coeffs) -> Poly:
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(field, tuple(cs))

    @classmethod
    def constant(cls, field: FieldSpec, c) -> Poly:
        return cls.make(field, [c])

    @classmethod
    def x_minus(cls, field: FieldSpec, lam) -> Poly:
        return cls.make(field, [field.neg(field(lam)), 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (self.field.one,)

    def _make(self, cs) -> Poly:
        cs = [self.field.norm(c) for c in cs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(self.field, tuple(cs))

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return self._make([x + y for x, y in zip(a, b)])

    def __neg__(self) -> Poly:
        return self._make([-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return self._make(out)

    def __pow__(self, e: int) -> Poly:
        out = Poly.constant(self.field, 1)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        inv = f.inv(other.lead)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(f, ()), self
        quo = [f.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = f.norm(rem[k + other.degree] * inv)
            quo[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = f.norm(rem[k + j] - c * b)
        return self._make(quo), self._make(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = self.field.inv(self.lead)
        return self._make([c * inv for c in self.coeffs])

    def __call__(self, x) -> Scalar:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = self.field.norm(acc * x + c)
        return acc

    def to_json(self) -> list:
        return [self.field.to_json(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == 1 and mono:
                terms.append(mono)
            elif mono:
                terms.append(f"{self.field.to_json(c)}*{mono}")
            else:
                terms.append(str(self.field.to_json(c)))
        return " + ".join(terms)

    def sort_key(self) -> tuple:
        return (self.degree, tuple(_scalar_key(c) for c in reversed(self.coeffs)))


def _scalar_key(c) -> tuple:
    c = Fraction(c)
    return (c.numerator * 1.0 / c.denominator, c.numerator, c.denominator)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def jordan_block(field: FieldSpec, lam, k: int) -> MatrixF:
    """lam on the diagonal, 1 on the superdiagonal."""
    lam = field(lam)
    return MatrixF(field, k, k, tuple(tuple(lam if i == j else (field.one if j == i + 1 else field.zero)
                                            for j in range(k)) for i in range(k)))


def companion(poly: Poly) -> MatrixF:
    f = poly.field
    p = poly.monic()
    n = p.degree
    grid = [[f.zero] * n for _ in range(n)]
    for i in range(1, n):
        grid[i][i - 1] = f.one
    for i in range(n):
        grid[i][n - 1] = f.neg(p.coeffs[i])
    return MatrixF(f, n, n, tuple(tuple(r) for r in grid))


def invariant_factors(t: MatrixF) -> tuple[Poly, ...]:
    """Non-unit invariant factors of ``t``, each dividing the next.

    Computed from the Smith normal form of ``xI - t`` over the polynomial ring.
    """
    if not t.is_square():
        raise ValueError("invariant factors need a square matrix")
    f = t.field
    n = t.rows
    a = [[Poly.make(f, [f.neg(t[i, j])] + ([1] if i == j else [])) for j in range(n)] for i in range(n)]
    diag = []
    for k in range(n):
        while True:
            entries = [(a[i][j].degree, i, j) for i in range(k, n) for j in range(k, n) if not a[i][j].is_zero()]
            if not entries:
                break
            _, pi, pj = min(entries)
            a[k], a[pi] = a[pi], a[k]
            for row in a:
                row[k], row[pj] = row[pj], row[k]
            piv = a[k][k]
            clean = True
            for i in range(k + 1, n):
                if a[i][k].is_zero():
                    continue
                q, r = divmod(a[i][k], piv)
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                clean = clean and r.is_zero()
            for j in range(k + 1, n):
                if a[k][j].is_zero():
                    continue
                q, r = divmod(a[k][j], piv)
                for row in a:
                    row[j] = row[j] - q * row[k]
                clean = clean and r.is_zero()
            if not clean:
                continue
            bad = next((i for i in range(k + 1, n) for j in range(k + 1, n)
                        if not (a[i][j] % piv).is_zero()), None)
            if bad is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[bad])]
        diag.append(a[k][k].monic())
    return tuple(d for d in diag if d.degree >= 1)


@lru_cache(maxsize=4096)
def factor(poly: Poly) -> tuple[tuple[Poly, int], ...]:
    """Monic irreducible factorization, sorted by degree then coefficients."""
    import sympy

    f = poly.field
    if poly.degree < 1:
        return ()
    x = sympy.Symbol("x")
    coeffs = [sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in reversed(poly.coeffs)]
    if f.p is None:
        sp = sympy.Poly(coeffs, x, domain="QQ")
    else:
        sp = sympy.Poly(coeffs, x, modulus=f.p)
    _, parts = sp.factor_list()
    out = []
    for fac, e in parts:
        cs = [Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in fac.all_coeffs()]
        out.append((Poly.make(f, list(reversed(cs))).monic(), int(e)))
    return tuple(sorted(out, key=lambda fe: (fe[0].sort_key(), fe[1])))


@dataclass(frozen=True)
class EndoCanonicalForm:
    dim: int
    char_poly: Poly
    invariant_factors: tuple[Poly, ...]
    split_cells: tuple[tuple[Scalar, int], ...]
    residual_blocks: tuple[tuple[Poly, int], ...]

    def count_cells(self, lam) -> int:
        """Number of split cells with eigenvalue ``lam`` (one per cell)."""
        lam = self.char_poly.field(lam)
        return sum(1 for mu, _ in self.split_cells if mu == lam)

    def is_split(self) -> bool:
        return not self.residual_blocks

    def same_class(self, other: EndoCanonicalForm) -> bool:
        return self.invariant_factors == other.invariant_factors

    def to_json(self) -> dict:
        fj = self.char_poly.field.to_json
        return {
            "dim": self.dim,
            "char_poly": self.char_poly.to_json(),
            "invariant_factors": [p.to_json() for p in self.invariant_factors],
            "cells": [[fj(lam), k] for lam, k in self.split_cells],
            "residual_blocks": [[p.to_json(), e] for p, e in self.residual_blocks],
        }


def canonical_form(t: MatrixF) -> EndoCanonicalForm:
    f = t.field
    factors = invariant_factors(t)
    char = Poly.constant(f, 1)
    for d in factors:
        char = char * d
    cells, residual = [], []
    for d in factors:
        for irr, e in factor(d):
            if irr.degree == 1:
                cells.append((f.neg(irr.coeffs[0]), e))
            else:
                residual.append((irr, e))
    cells.sort(key=lambda c: (_scalar_key(c[0]), c[1]))
    residual.sort(key=lambda b: (b[0].sort_key(), b[1]))
    return EndoCanonicalForm(t.rows, char, factors, tuple(cells), tuple(residual))
