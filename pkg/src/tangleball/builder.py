"""Diagrams of tangle closures.

Builds the 4-valent diagram of a tangle expression by composing elementary
crossings, then closes it numerator- or denominator-wise.  Slot conventions
(counterclockwise = SW, SE, NE, NW for an elementary crossing) put the two
strands on opposite slots; a positive twist has the positive-slope strand on
top, so positive horizontal and vertical twists agree on the single-crossing
tangle.
"""

from __future__ import annotations

from .diagrams import LinkGraph, PDCode
from .tangles import (
    FormalSum,
    HorizontalTwist,
    InfinityTangle,
    Invert,
    Mirror,
    Rotate,
    TangleExpr,
    VerticalTwist,
    ZeroTangle,
)

_CORNERS = ("NW", "NE", "SE", "SW")


class TangleDiagramBuilder:
    def __init__(self) -> None:
        self.graph = LinkGraph()

    def build(self, t: TangleExpr) -> tuple[dict[str, object], set[int]]:
        """Returns (corner tokens, crossing ids of the subtree)."""
        g = self.graph
        if isinstance(t, ZeroTangle):
            nw, ne = g.new_strand()
            sw, se = g.new_strand()
            return {"NW": nw, "NE": ne, "SW": sw, "SE": se}, set()
        if isinstance(t, InfinityTangle):
            nw, sw = g.new_strand()
            ne, se = g.new_strand()
            return {"NW": nw, "NE": ne, "SW": sw, "SE": se}, set()
        if isinstance(t, HorizontalTwist):
            corners, ids = self.build(t.child)
            od = 0 if t.k > 0 else 1
            for _ in range(abs(t.k)):
                c = g.new_crossing(od)
                g.attach((c, 3), corners["NE"])
                g.attach((c, 0), corners["SE"])
                corners["NE"] = g.expose((c, 2))
                corners["SE"] = g.expose((c, 1))
                ids.add(c)
            return corners, ids
        if isinstance(t, VerticalTwist):
            corners, ids = self.build(t.child)
            od = 0 if t.k > 0 else 1
            for _ in range(abs(t.k)):
                c = g.new_crossing(od)
                g.attach((c, 3), corners["SW"])
                g.attach((c, 2), corners["SE"])
                corners["SW"] = g.expose((c, 0))
                corners["SE"] = g.expose((c, 1))
                ids.add(c)
            return corners, ids
        if isinstance(t, Mirror):
            corners, ids = self.build(t.child)
            self._flip(ids)
            return corners, ids
        if isinstance(t, Rotate):
            corners, ids = self.build(t.child)
            return self._rotate(corners), ids
        if isinstance(t, Invert):
            corners, ids = self.build(t.child)
            self._flip(ids)
            return self._rotate(corners), ids
        if isinstance(t, FormalSum):
            left, lids = self.build(t.left)
            right, rids = self.build(t.right)
            g.join(left["NE"], right["NW"])
            g.join(left["SE"], right["SW"])
            corners = {
                "NW": left["NW"],
                "SW": left["SW"],
                "NE": right["NE"],
                "SE": right["SE"],
            }
            return corners, lids | rids
        raise TypeError(f"not a tangle expression: {t!r}")

    def _flip(self, ids: set[int]) -> None:
        for c in ids:
            self.graph.over_diags[c] ^= 1

    @staticmethod
    def _rotate(corners: dict[str, object]) -> dict[str, object]:
        # Counterclockwise quarter turn of the tangle disk.
        return {
            "NW": corners["NE"],
            "SW": corners["NW"],
            "SE": corners["SW"],
            "NE": corners["SE"],
        }


def tangle_closure_graph(t: TangleExpr, closure: str) -> LinkGraph:
    builder = TangleDiagramBuilder()
    corners, _ = builder.build(t)
    g = builder.graph
    if closure == "numerator":
        g.join(corners["NW"], corners["NE"])
        g.join(corners["SW"], corners["SE"])
    elif closure == "denominator":
        g.join(corners["NW"], corners["SW"])
        g.join(corners["NE"], corners["SE"])
    else:
        raise ValueError(f"closure must be 'numerator' or 'denominator', not {closure!r}")
    return g


def tangle_closure_diagram(t: TangleExpr, closure: str) -> PDCode:
    """PD code of the numerator or denominator closure of a tangle."""
    return tangle_closure_graph(t, closure).resolved().to_pdcode()
