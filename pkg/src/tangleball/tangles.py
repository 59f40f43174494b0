"""Conway-style tangle expressions and the exact tangle fraction.

A tangle expression is a tree built from the two trivial tangles by twisting,
rotation, mirroring, inversion and formal (horizontal) sum.  Every sum-free
tree denotes a rational tangle and carries an extended-rational fraction; the
fraction laws used here are

    F(zero) = 0            F(htwist(T, k)) = F(T) + k
    F(inf)  = 1/0          F(vtwist(T, k)) = 1/(k + 1/F(T))
    F(mirror(T)) = -F(T)   F(rot(T)) = -1/F(T)    F(inv(T)) = 1/F(T)

with 1/0 = inf, 1/inf = 0 and inf + k = inf.  Trees containing a formal sum
have no fraction; they exist so denominator closures of sums can be classified
as connected sums.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConwaySyntaxError, NotRationalError
from .rationals import INFINITY, ZERO as FRAC_ZERO, ExtRational


class TangleExpr:
    """Base class for tangle expression nodes."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class ZeroTangle(TangleExpr):
    pass


@dataclass(frozen=True, slots=True)
class InfinityTangle(TangleExpr):
    pass


@dataclass(frozen=True, slots=True)
class HorizontalTwist(TangleExpr):
    child: TangleExpr
    k: int


@dataclass(frozen=True, slots=True)
class VerticalTwist(TangleExpr):
    child: TangleExpr
    k: int


@dataclass(frozen=True, slots=True)
class Rotate(TangleExpr):
    child: TangleExpr


@dataclass(frozen=True, slots=True)
class Mirror(TangleExpr):
    child: TangleExpr


@dataclass(frozen=True, slots=True)
class Invert(TangleExpr):
    child: TangleExpr


@dataclass(frozen=True, slots=True)
class FormalSum(TangleExpr):
    left: TangleExpr
    right: TangleExpr


ZERO = ZeroTangle()
INF = InfinityTangle()


def contains_sum(t: TangleExpr) -> bool:
    if isinstance(t, FormalSum):
        return True
    if isinstance(t, (HorizontalTwist, VerticalTwist, Rotate, Mirror, Invert)):
        return contains_sum(t.child)
    return False


def sum_leaves(t: TangleExpr) -> list[TangleExpr]:
    """Maximal sum-free subtrees of t, left to right."""
    if isinstance(t, FormalSum):
        return sum_leaves(t.left) + sum_leaves(t.right)
    if contains_sum(t):
        # A sum nested under a unary operation does not denote a tangle sum
        # we can decompose; the fraction laws below reject it as well.
        raise NotRationalError("formal sum nested under a unary tangle operation")
    return [t]


def fraction(t: TangleExpr) -> ExtRational:
    """Exact tangle fraction of a sum-free expression."""
    if isinstance(t, ZeroTangle):
        return FRAC_ZERO
    if isinstance(t, InfinityTangle):
        return INFINITY
    if isinstance(t, HorizontalTwist):
        return fraction(t.child).add_int(t.k)
    if isinstance(t, VerticalTwist):
        return fraction(t.child).reciprocal().add_int(t.k).reciprocal()
    if isinstance(t, Rotate):
        return -fraction(t.child).reciprocal()
    if isinstance(t, Mirror):
        return -fraction(t.child)
    if isinstance(t, Invert):
        return fraction(t.child).reciprocal()
    raise NotRationalError("tangle contains a formal sum; no fraction is defined")


def is_isotopic(t1: TangleExpr, t2: TangleExpr) -> bool:
    """Rational tangles are isotopic exactly when their fractions agree."""
    return fraction(t1) == fraction(t2)


@dataclass(frozen=True, slots=True)
class TwistVector:
    """Twist entries [a_1, ..., a_n] evaluating to a_n + 1/(... + 1/a_1).

    The infinity tangle is not a finite continued fraction; its canonical
    vector is the designated token rendered as ``inf``.
    """

    entries: tuple[int, ...]
    infinite: bool = False

    def __str__(self) -> str:
        if self.infinite:
            return "inf"
        return "[" + ",".join(str(a) for a in self.entries) + "]"


INFINITY_TWISTS = TwistVector((), True)


def canonical_twists(f: ExtRational) -> TwistVector:
    """All-same-sign continued-fraction expansion of f.

    Every entry shares the sign of f and only the last may be zero; this is
    the plain Euclidean (floor) expansion read innermost-first, so it is the
    unique such vector for each rational.
    """
    if f.is_infinite:
        return INFINITY_TWISTS
    if f.is_zero:
        return TwistVector((0,))
    sign = 1 if f.num > 0 else -1
    p, q = abs(f.num), f.den
    outermost_first = []
    while q:
        a, r = divmod(p, q)
        outermost_first.append(a)
        p, q = q, r
    return TwistVector(tuple(sign * a for a in reversed(outermost_first)))


def twists_to_expr(tv: TwistVector) -> TangleExpr:
    """Expression tree whose fraction is the vector's continued fraction.

    The alternation is anchored so the outermost entry is a horizontal twist:
    odd-length vectors grow from htwist(0, a_1), even-length ones from
    vtwist(inf, a_1).
    """
    if tv.infinite:
        return INF
    entries = tv.entries
    if not entries:
        return ZERO
    horizontal_first = len(entries) % 2 == 1
    if horizontal_first:
        t: TangleExpr = HorizontalTwist(ZERO, entries[0])
    else:
        t = VerticalTwist(INF, entries[0])
    for i, a in enumerate(entries[1:], start=1):
        if (i % 2 == 1) == horizontal_first:
            t = VerticalTwist(t, a)
        else:
            t = HorizontalTwist(t, a)
    return t


def _twist_chain(t: TangleExpr) -> tuple[int, ...] | None:
    """Entries if t has exactly the shape produced by twists_to_expr."""
    chain = []
    node = t
    while isinstance(node, (HorizontalTwist, VerticalTwist)):
        chain.append((isinstance(node, HorizontalTwist), node.k))
        node = node.child
    if not chain:
        return None
    if not chain[0][0]:  # outermost twist must be horizontal
        return None
    for (a, _), (b, _) in zip(chain, chain[1:]):
        if a == b:
            return None
    innermost_horizontal = chain[-1][0]
    if innermost_horizontal and not isinstance(node, ZeroTangle):
        return None
    if not innermost_horizontal and not isinstance(node, InfinityTangle):
        return None
    return tuple(k for _, k in reversed(chain))


def render(t: TangleExpr) -> str:
    """Pretty-print in the grammar accepted by parse_conway."""
    if isinstance(t, ZeroTangle):
        return "0"
    if isinstance(t, InfinityTangle):
        return "inf"
    entries = _twist_chain(t)
    if entries is not None:
        return "[" + ",".join(str(a) for a in entries) + "]"
    if isinstance(t, HorizontalTwist):
        return f"htwist({render(t.child)},{t.k})"
    if isinstance(t, VerticalTwist):
        return f"vtwist({render(t.child)},{t.k})"
    if isinstance(t, Rotate):
        return f"rot({render(t.child)})"
    if isinstance(t, Mirror):
        return f"mirror({render(t.child)})"
    if isinstance(t, Invert):
        return f"inv({render(t.child)})"
    if isinstance(t, FormalSum):
        return f"sum({render(t.left)},{render(t.right)})"
    raise TypeError(f"not a tangle expression: {t!r}")


_TOKEN = re.compile(r"\s*(?:(-?\d+)|([a-z]+)|([\[\](),]))")

_UNARY = {"mirror": Mirror, "rot": Rotate, "inv": Invert}
_TWISTS = {"htwist": HorizontalTwist, "vtwist": VerticalTwist}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if m is None:
                stripped = text[i:].lstrip()
                at = len(text) - len(stripped)
                raise ConwaySyntaxError(f"unexpected character {stripped[0]!r}", at)
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("ident", m.group(2), m.start(2)))
            else:
                self.tokens.append(("sym", m.group(3), m.start(3)))
            i = m.end()
        self.index = 0

    def _peek(self) -> tuple[str, str, int] | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def _next(self, expect: str | None = None) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise ConwaySyntaxError("unexpected end of input", len(self.text))
        if expect is not None and tok[1] != expect:
            raise ConwaySyntaxError(f"expected {expect!r}, found {tok[1]!r}", tok[2])
        self.index += 1
        return tok

    def parse(self) -> TangleExpr:
        t = self.tangle()
        tok = self._peek()
        if tok is not None:
            raise ConwaySyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return t

    def integer(self) -> int:
        kind, value, pos = self._next()
        if kind != "int":
            raise ConwaySyntaxError(f"expected an integer, found {value!r}", pos)
        return int(value)

    def tangle(self) -> TangleExpr:
        kind, value, pos = self._next()
        if kind == "int":
            if value == "0":
                return ZERO
            raise ConwaySyntaxError(
                "bare integers are not tangles (write [k] for a twist)", pos
            )
        if kind == "sym" and value == "[":
            entries = [self.integer()]
            while True:
                k, v, p = self._next()
                if k == "sym" and v == "]":
                    break
                if not (k == "sym" and v == ","):
                    raise ConwaySyntaxError(f"expected ',' or ']', found {v!r}", p)
                entries.append(self.integer())
            return twists_to_expr(TwistVector(tuple(entries)))
        if kind == "ident":
            if value == "inf":
                return INF
            if value in _UNARY:
                self._next("(")
                child = self.tangle()
                self._next(")")
                return _UNARY[value](child)
            if value in _TWISTS:
                self._next("(")
                child = self.tangle()
                self._next(",")
                k = self.integer()
                self._next(")")
                return _TWISTS[value](child, k)
            if value == "sum":
                self._next("(")
                left = self.tangle()
                self._next(",")
                right = self.tangle()
                self._next(")")
                return FormalSum(left, right)
            raise ConwaySyntaxError(f"unknown operation {value!r}", pos)
        raise ConwaySyntaxError(f"expected a tangle, found {value!r}", pos)


def parse_conway(text: str) -> TangleExpr:
    """Parse Conway-style tangle text: 0, inf, [a1,...,an], or compositions
    mirror(T), rot(T), inv(T), htwist(T,k), vtwist(T,k), sum(T1,T2)."""
    return _Parser(text).parse()
