"""Coefficient fields: prime fields GF(p) and the rationals."""
from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

MAX_PRIME = 2**31 - 1


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) when ``p`` is set, the rationals when ``p`` is None.

    Elements of GF(p) are plain ints in ``range(p)``; rationals are
    ``Fraction`` instances.
    """

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise FieldError(f"characteristic must be an int, got {self.p!r}")
            if self.p > MAX_PRIME or not is_prime(self.p):
                raise FieldError(f"{self.p} is not a prime <= {MAX_PRIME}")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __str__(self) -> str:
        return self.name

    @property
    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x) -> Scalar:
        """Coerce an int, Fraction or ``"a/b"`` string into the field."""
        if isinstance(x, bool):
            raise FieldError(f"not a field element: {x!r}")
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise FieldError(f"cannot parse field element {x!r}") from exc
        if isinstance(x, int):
            return x % self.p if self.p is not None else Fraction(x)
        if isinstance(x, Fraction):
            if self.p is None:
                return x
            den = x.denominator % self.p
            if den == 0:
                raise FieldError(f"{x} has denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        raise FieldError(f"not a field element: {x!r}")

    def norm(self, x: Scalar) -> Scalar:
        return x % self.p if self.p is not None else x

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p) if self.p is not None else 1 / x

    def neg(self, x: Scalar) -> Scalar:
        return (-x) % self.p if self.p is not None else -x

    def elements(self) -> Iterator[int]:
        if self.p is None:
            raise FieldError("the rationals cannot be enumerated")
        return iter(range(self.p))

    def to_json(self, x: Scalar):
        if self.p is not None:
            return int(x)
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def spec_json(self):
        return "Q" if self.p is None else {"prime": self.p}

    @classmethod
    def from_json(cls, obj) -> FieldSpec:
        """Accept ``"Q"``, ``{"prime": p}``, a bare int or a numeric string."""
        if obj in ("Q", "q", "QQ"):
            return cls.rationals()
        if isinstance(obj, dict) and "prime" in obj:
            obj = obj["prime"]
        if isinstance(obj, str) and obj.strip().isdigit():
            obj = int(obj)
        if isinstance(obj, int) and not isinstance(obj, bool):
            return cls.prime(obj)
        raise FieldError(f"unrecognized field description {obj!r}")


QQ = FieldSpec.rationals()
