"""Outward-rounded interval arithmetic with exact rational endpoints.

Used wherever a verdict depends on an irrational magnitude: the endpoints
are Fractions, every operation encloses the true result, and comparisons
only answer when the whole interval is on one side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Q = Fraction


@dataclass(frozen=True)
class RInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def point(cls, x) -> "RInterval":
        x = Q(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __add__(self, other) -> "RInterval":
        other = _coerce(other)
        return RInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __mul__(self, other) -> "RInterval":
        other = _coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RInterval(min(products), max(products))

    __rmul__ = __mul__

    def pow_int(self, e: int, digits: int = 40) -> "RInterval":
        """e-th power by repeated squaring; endpoints are re-rounded outward
        to `digits` decimals after each step to stop denominator blowup."""
        if e < 0:
            raise ValueError("negative exponent")
        acc = RInterval.point(1)
        base = self
        while e:
            if e & 1:
                acc = (acc * base).tighten(digits)
            e >>= 1
            if e:
                base = (base * base).tighten(digits)
        return acc

    def sqrt(self, digits: int = 18) -> "RInterval":
        """Enclosure of the square root; lower endpoint clamped at 0."""
        lo = max(self.lo, Q(0))
        if self.hi < 0:
            raise ValueError("square root of a negative interval")
        scale = 10 ** digits
        lo_n = isqrt((lo.numerator * scale * scale) // lo.denominator)
        hi_n = isqrt((self.hi.numerator * scale * scale) // self.hi.denominator) + 1
        return RInterval(Q(lo_n, scale), Q(hi_n, scale))

    def tighten(self, digits: int = 40) -> "RInterval":
        """Round endpoints outward to `digits` decimal places."""
        scale = 10 ** digits
        lo = Q((self.lo.numerator * scale) // self.lo.denominator, scale)
        hi_num = -((-self.hi.numerator * scale) // self.hi.denominator)
        return RInterval(lo, Q(hi_num, scale))

    def definitely_lt(self, bound) -> bool:
        return self.hi < Q(bound)

    def definitely_ge(self, bound) -> bool:
        return self.lo >= Q(bound)

    def midpoint_float(self) -> float:
        return float((self.lo + self.hi) / 2)


def _coerce(x) -> RInterval:
    if isinstance(x, RInterval):
        return x
    return RInterval.point(x)
