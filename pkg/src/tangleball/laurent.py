"""Integer Laurent polynomials and exact determinants.

Everything here is exact: coefficients are Python integers, determinants are
computed fraction-free (Bareiss) or by integer evaluation/interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LaurentPoly:
    """Sparse Laurent polynomial over the integers, as ((exponent, coeff), ...)."""

    terms: tuple[tuple[int, int], ...]

    @staticmethod
    def of(coeffs: dict[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly.of({0: c})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly.of({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.of(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly.of(out)

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly(())
        return LaurentPoly(tuple((e, c * k) for e, k in self.terms))

    def shift(self, by: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e + by, c) for e, c in self.terms))

    @property
    def min_exp(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_exp(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def eval_int(self, t: int) -> Fraction:
        """Exact value at an integer t (t != 0 unless min_exp >= 0)."""
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(t) ** e
        return total

    def reversed_exponents(self) -> "LaurentPoly":
        """t -> 1/t substitution."""
        return LaurentPoly(tuple(sorted((-e, c) for e, c in self.terms)))

    def normalized(self) -> "LaurentPoly":
        """Canonical unit-multiple: lowest exponent 0; value at 1 positive when
        nonzero, otherwise positive leading coefficient."""
        if self.is_zero:
            return self
        p = self.shift(-self.min_exp)
        at_one = sum(c for _, c in p.terms)
        lead = p.terms[-1][1]
        sign = at_one if at_one != 0 else lead
        return p.scale(-1) if sign < 0 else p

    def is_palindromic_up_to_units(self) -> bool:
        return self.normalized() == self.reversed_exponents().normalized()

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                parts.append(f"{c:+d}")
            elif e == 1:
                parts.append(f"{c:+d}*t")
            else:
                parts.append(f"{c:+d}*t^{e}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def poly_matrix_determinant(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials.

    Rows are cleared to ordinary polynomials first (a unit multiple), then the
    determinant polynomial is recovered from integer determinants at enough
    sample points by Lagrange interpolation.  The result is exact up to the
    recorded unit shift, which is reapplied before returning.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.const(1)
    shift_total = 0
    rows: list[list[LaurentPoly]] = []
    degree = 0
    for row in matrix:
        row_min = min((p.min_exp for p in row if not p.is_zero), default=0)
        shift_total += -row_min if row_min < 0 else 0
        shifted = [p.shift(-row_min) if row_min < 0 else p for p in row]
        rows.append(shifted)
        degree += max((p.max_exp for p in shifted), default=0)
    points: list[int] = []
    t = 0
    while len(points) < degree + 1:
        points.append(t)
        if t <= 0:
            t = -t + 1
        else:
            t = -t
    values = []
    for t in points:
        entry = [[_eval_poly_int(p, t) for p in row] for row in rows]
        values.append(bareiss_determinant(entry))
    coeffs = _lagrange_interpolate(points, values)
    return LaurentPoly.of({e: c for e, c in enumerate(coeffs)}).shift(-shift_total)


def _eval_poly_int(p: LaurentPoly, t: int) -> int:
    total = 0
    for e, c in p.terms:
        total += c * t**e
    return total


def _lagrange_interpolate(points: list[int], values: list[int]) -> list[int]:
    """Integer coefficients of the unique interpolating polynomial."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        if yi == 0:
            continue
        numer = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            # multiply numer by (x - xj)
            new = [Fraction(0)] * (len(numer) + 1)
            for k, c in enumerate(numer):
                new[k] += c * (-xj)
                new[k + 1] += c
            numer = new
            denom *= xi - xj
        w = Fraction(yi) / denom
        for k, c in enumerate(numer):
            coeffs[k] += c * w
    out = []
    for c in coeffs:
        assert c.denominator == 1, "interpolation of an integer polynomial"
        out.append(int(c))
    return out


def poly_matrix_determinant_bareiss(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Reference fraction-free elimination over the polynomial ring.

    Slow; used to cross-check poly_matrix_determinant on small matrices.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.const(1)
    shift_total = 0
    m: list[list[LaurentPoly]] = []
    for row in matrix:
        row_min = min((p.min_exp for p in row if not p.is_zero), default=0)
        if row_min < 0:
            shift_total += -row_min
            m.append([p.shift(-row_min) for p in row])
        else:
            m.append(list(row))
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly(())
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_poly_div(num, prev)
            m[i][k] = LaurentPoly(())
        prev = pivot
    det = m[n - 1][n - 1].scale(sign)
    return det.shift(-shift_total)


def _exact_poly_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    if num.is_zero:
        return num
    assert not den.is_zero
    nshift, dshift = num.min_exp, den.min_exp
    a = dict(num.shift(-nshift).terms)
    b = dict(den.shift(-dshift).terms)
    bdeg = max(b)
    blead = b[bdeg]
    out: dict[int, int] = {}
    adeg = max(a)
    while a:
        adeg = max(a)
        if adeg < bdeg:
            raise ArithmeticError("inexact polynomial division")
        q, r = divmod(a[adeg], blead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[adeg - bdeg] = q
        for e, c in b.items():
            k = e + adeg - bdeg
            v = a.get(k, 0) - c * q
            if v:
                a[k] = v
            else:
                a.pop(k, None)
    return LaurentPoly.of(out).shift(nshift - dshift)
