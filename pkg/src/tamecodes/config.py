"""Point-configuration encoding of closed r-codes and open (r-1)-codes.

A closed code [x, y] becomes the point (x, y) on or above the diagonal and an
open code (x, y) becomes (y, x) below it. For angle-valued maps the points
live on the quotient of the plane by (x, y) ~ (x + 2π, y + 2π); the stored
representative has x in [0, 2π) and the complex encoding is
exp((y - x) + i x). Plane points encode as x + i y. The configuration is the
root multiset of a monic polynomial.

This is the only floating-point part of the package. Root checks use a
relative tolerance of 1e-9.
"""
from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

TOLERANCE = 1e-9
CLUSTER_RADIUS = 0.1
MULTIPLE_ROOT_TOL = 1e-12
TAU = 2 * math.pi


@dataclass(frozen=True)
class Configuration:
    degree: int
    kind: str  # "plane" or "torus"
    points: tuple[tuple[float, float], ...]

    def __len__(self) -> int:
        return len(self.points)

    def encoded(self) -> list[complex]:
        if self.kind == "plane":
            return [complex(x, y) for x, y in self.points]
        return [cmath.exp(complex(y - x, x)) for x, y in self.points]


@dataclass(frozen=True)
class ConfigPolynomial:
    """Monic, coefficients from the leading term down."""

    coeffs: tuple[complex, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in self.coeffs:
            acc = acc * z + c
        return acc

    def derivative(self, order: int = 1) -> ConfigPolynomial:
        coeffs = np.array(self.coeffs, dtype=complex)
        for _ in range(order):
            coeffs = np.polyder(coeffs)
        return ConfigPolynomial(tuple(complex(c) for c in coeffs))

    def roots(self) -> list[complex]:
        """Roots with multiplicity.

        Companion-matrix roots scatter around a k-fold root by about eps^(1/k).
        Each root is grouped with its nearest neighbours, the largest group
        whose polished centre also annihilates the first k-1 derivatives wins,
        and that centre is reported k times.
        """
        if self.degree < 1:
            return []
        left = sorted((complex(z) for z in np.roots(np.array(self.coeffs, dtype=complex))),
                      key=lambda z: (z.real, z.imag))
        out = []
        while left:
            z = left[0]
            near = sorted(left, key=lambda w: abs(w - z))
            near = [w for w in near if abs(w - z) <= CLUSTER_RADIUS * max(1.0, abs(z))]
            for k in range(len(near), 0, -1):
                group = near[:k]
                c = self._polish(sum(group) / k, k - 1)
                if k == 1 or all(self.derivative(j).residual(c) <= MULTIPLE_ROOT_TOL for j in range(k)):
                    break
            out.extend([c] * k)
            for w in group:
                left.remove(w)
        return out

    def _polish(self, z: complex, order: int, steps: int = 6) -> complex:
        f = self.derivative(order)
        df = f.derivative()
        for _ in range(steps):
            slope = df(z)
            if slope == 0:
                break
            step = f(z) / slope
            z -= step
            if abs(step) <= 1e-16 * max(1.0, abs(z)):
                break
        return z

    def residual(self, z: complex) -> float:
        """|P(z)| relative to the size of the terms."""
        scale = sum(abs(c) * abs(z) ** (self.degree - j) for j, c in enumerate(self.coeffs))
        return abs(self(z)) / (1.0 + scale)

    def to_json(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self.coeffs]


def canonical_torus_point(x: float, y: float) -> tuple[float, float]:
    shift = math.floor(x / TAU)
    return (x - TAU * shift, y - TAU * shift)


def from_codes(kind: str, degree: int, closed: Iterable[tuple[float, float]],
               open_prev: Iterable[tuple[float, float]]) -> Configuration:
    """``closed`` are [x, y] closed r-codes, ``open_prev`` are (x, y) open (r-1)-codes."""
    pts = [(float(x), float(y)) for x, y in closed] + [(float(y), float(x)) for x, y in open_prev]
    if kind == "torus":
        pts = [canonical_torus_point(x, y) for x, y in pts]
    elif kind != "plane":
        raise ValueError(f"unknown configuration kind {kind!r}")
    return Configuration(degree, kind, tuple(sorted(pts)))


def _codes_from_report(report: Any, degree: int, kind: str) -> list[tuple[float, float]]:
    if hasattr(report, "angle_codes"):
        return [(x, y) for x, y, t in report.angle_codes(degree) if t == kind]
    for entry in report.get("degrees", []):
        if entry.get("degree") == degree:
            return [tuple(c["angles"]) for c in entry.get("barcodes", []) if c["type"] == kind]
    return []


def configuration(report: Any, degree: int) -> Configuration:
    """Configuration of a report (an InvariantReport or its JSON form) in one degree."""
    kind = report.kind if hasattr(report, "kind") else report["kind"]
    closed = _codes_from_report(report, degree, "closed")
    open_prev = _codes_from_report(report, degree - 1, "open")
    return from_codes("torus" if kind == "circle" else "plane", degree, closed, open_prev)


def polynomial(conf: Configuration) -> ConfigPolynomial:
    roots = conf.encoded()
    if not roots:
        return ConfigPolynomial((1 + 0j,))
    return ConfigPolynomial(tuple(complex(c) for c in np.poly(np.array(roots, dtype=complex))))


def root_error(poly: ConfigPolynomial, conf: Configuration) -> float:
    """Largest relative distance between the encoded points and the computed roots.

    Roots are matched greedily to the nearest unused point.
    """
    targets = conf.encoded()
    found = poly.roots()
    if len(found) != len(targets):
        return math.inf
    worst = 0.0
    remaining = list(found)
    for z in sorted(targets, key=lambda w: (w.real, w.imag)):
        k = min(range(len(remaining)), key=lambda i: abs(remaining[i] - z))
        worst = max(worst, abs(remaining.pop(k) - z) / max(1.0, abs(z)))
    return worst


def to_json(conf: Configuration, poly: ConfigPolynomial | None = None) -> dict:
    poly = polynomial(conf) if poly is None else poly
    return {"degree": conf.degree, "kind": conf.kind, "points": [list(p) for p in conf.points],
            "poly": poly.to_json()}


def points_close(a: Sequence[tuple[float, float]], b: Sequence[tuple[float, float]], tol: float = TOLERANCE) -> bool:
    return len(a) == len(b) and all(math.isclose(x1, x2, rel_tol=tol, abs_tol=tol) and
                                    math.isclose(y1, y2, rel_tol=tol, abs_tol=tol)
                                    for (x1, y1), (x2, y2) in zip(a, b))
