"""Tangle closures and 2-bridge links in Schubert normal form.

Closing a rational tangle with fraction p/q gives the 2-bridge link b(p, q)
(numerator) or b(q, p) (denominator); triviality of the numerator closure is
governed by |p| and of the denominator closure by |q|.  Normal forms store
the first parameter nonnegative and q reduced into (0, p), picking the
smaller of q and q^{-1} mod p, so unoriented equivalence is plain equality
while mirror images stay distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from . import mutations
from .builder import tangle_closure_diagram
from .diagrams import PDCode
from .errors import NotRationalError
from .rationals import ExtRational
from .tangles import TangleExpr, canonical_twists, fraction, sum_leaves, twists_to_expr


@dataclass(frozen=True, slots=True)
class TwoBridge:
    """Schubert normal form b(p, q); b(1, 0) is the unknot, b(0, 1) the unlink."""

    p: int
    q: int

    def __str__(self) -> str:
        return f"b({self.p},{self.q})"

    @property
    def components(self) -> int:
        return 2 if self.p % 2 == 0 else 1


def normalize(p: int, q: int) -> TwoBridge:
    """Normal form of the closure parameters; (p, q) must be coprime."""
    if gcd(abs(p), abs(q)) != 1:
        raise ValueError(f"({p}, {q}) is not a reduced pair")
    if p == 0:
        return TwoBridge(0, 1)
    if p < 0:
        p, q = -p, -q
    if p == 1:
        return TwoBridge(1, 0)
    if mutations.BROKEN_SCHUBERT_NORMALIZATION:
        return TwoBridge(p, q)
    qm = q % p
    qi = pow(qm, -1, p)
    return TwoBridge(p, min(qm, qi))


def numerator_closure(f: ExtRational) -> TwoBridge:
    """b(|p|, q-class) for the numerator closure of a tangle with fraction p/q."""
    return normalize(f.num, f.den)


def denominator_closure(f: ExtRational) -> TwoBridge:
    """b(|q|, p-class) for the denominator closure; trivial iff |q| <= 1."""
    return normalize(f.den, f.num)


def is_trivial(b: TwoBridge) -> bool:
    return b.p <= 1


def schubert_equivalent(a: TwoBridge, b: TwoBridge) -> bool:
    """Unoriented, chirality-preserving 2-bridge equivalence."""
    if a.p != b.p:
        return False
    if a.p <= 1:
        return True
    return (a.q - b.q) % a.p == 0 or (a.q * b.q - 1) % a.p == 0


def determinant(b: TwoBridge) -> int:
    return b.p


@dataclass(frozen=True, slots=True)
class ConnectedSum:
    """Connected sum of nontrivial 2-bridge links; empty means the unknot."""

    summands: tuple[TwoBridge, ...]

    def __post_init__(self) -> None:
        for s in self.summands:
            if s.p < 2:
                raise ValueError(f"trivial summand {s} in a connected sum")

    def determinant(self) -> int:
        out = 1
        for s in self.summands:
            out *= s.p
        return out

    def __str__(self) -> str:
        if not self.summands:
            return "unknot"
        return " # ".join(str(s) for s in self.summands)


def denominator_of_sum(t: TangleExpr) -> ConnectedSum:
    """Denominator closure of a (possibly nested) tangle sum as a connected
    sum of the leaves' denominator closures, trivial summands dropped."""
    leaves = sum_leaves(t)
    summands = []
    for leaf in leaves:
        try:
            b = denominator_closure(fraction(leaf))
        except NotRationalError:
            raise
        if not is_trivial(b):
            summands.append(b)
    return ConnectedSum(tuple(summands))


class Verdict(Enum):
    COULD_BE_RATIONAL = "could-be-rational"
    NOT_RATIONAL = "not-rational"

    def __str__(self) -> str:
        return self.value


def rationality_obstruction(s: ConnectedSum) -> Verdict:
    """Denominators of rational tangles are prime 2-bridge links, so a
    composite denominator rules the source tangle out."""
    if len(s.summands) >= 2:
        return Verdict.NOT_RATIONAL
    return Verdict.COULD_BE_RATIONAL


def standard_diagram(b: TwoBridge) -> PDCode:
    """4-plat diagram: the numerator closure of the canonical twist vector of
    p/q.  Its Goeritz determinant is p and its component count follows the
    parity of p."""
    if b.p < 1:
        raise ValueError("standard_diagram requires p >= 1")
    f = ExtRational.of(b.p, b.q) if b.p > 1 else ExtRational(1, 0)
    expr = twists_to_expr(canonical_twists(f))
    return tangle_closure_diagram(expr, "numerator")
