"""Exact extended rationals: reduced p/q together with a single point at infinity.

The value 1/0 stands for the tangle fraction of the infinity tangle.  All
arithmetic is exact over Python integers; the only operations provided are the
ones the tangle fraction laws need (integer shift, negation, reciprocal).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, slots=True)
class ExtRational:
    """Reduced fraction num/den with den >= 0; (1, 0) is the unique infinity."""

    num: int
    den: int

    @staticmethod
    def of(num: int, den: int = 1) -> "ExtRational":
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not an extended rational")
            return ExtRational(1, 0)
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        return ExtRational(num // g, den // g)

    @staticmethod
    def parse(text: str) -> "ExtRational":
        """Parse 'p/q', a bare integer, or 'inf'."""
        text = text.strip()
        if text == "inf":
            return INFINITY
        if "/" in text:
            p, q = text.split("/", 1)
            return ExtRational.of(int(p), int(q))
        return ExtRational.of(int(text))

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def add_int(self, k: int) -> "ExtRational":
        if self.is_infinite:
            return self
        return ExtRational(self.num + k * self.den, self.den)

    def __neg__(self) -> "ExtRational":
        if self.is_infinite:
            return self
        return ExtRational(-self.num, self.den)

    def reciprocal(self) -> "ExtRational":
        return ExtRational.of(self.den, self.num)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)
INFINITY = ExtRational(1, 0)
