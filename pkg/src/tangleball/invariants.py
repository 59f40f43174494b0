"""Exact diagram invariants: linking number, Goeritz determinant, Alexander.

These are the oracle side of the package: everything the tangle calculus
claims symbolically is cross-checked against these, so they are computed from
first principles (checkerboard coloring, crossing relations) with exact
integer arithmetic throughout.
"""

from __future__ import annotations

from .diagrams import LinkGraph, PDCode, Port
from .errors import MalformedCodeError, NonPlanarCodeError, UnknownComponentError
from .laurent import LaurentPoly, bareiss_determinant, poly_matrix_determinant


def linking_number(pd: PDCode, comp_a: str, comp_b: str) -> int:
    """Half the signed count of crossings between the two named components."""
    names = set(pd.component_names())
    for name in (comp_a, comp_b):
        if name not in names:
            raise UnknownComponentError(name)
    if comp_a == comp_b:
        raise ValueError("linking number needs two distinct components")
    g = LinkGraph.from_pdcode(pd)
    r = g.resolved()
    comp_of_port = r.component_of_port()
    comp_name = {
        idx: r.component_name(idx) or f"k{idx}" for idx in range(len(r.comp_edges))
    }
    total = 0
    want = {comp_a, comp_b}
    for c in range(len(g.over_diags)):
        under = comp_name[comp_of_port[(c, r.under_in_slot(c))]]
        over = comp_name[comp_of_port[(c, r.over_in_slot(c))]]
        if {under, over} == want:
            total += r.crossing_sign(c)
    if total % 2:
        raise MalformedCodeError("odd signed inter-component crossing count")
    return total // 2


def _checkerboard(g: LinkGraph):
    """Faces, face-of-dart map, and a 2-coloring; None if uncolorable."""
    faces = g.faces()
    face_of: dict[Port, int] = {}
    for idx, face in enumerate(faces):
        for dart in face:
            face_of[dart] = idx
    colors: list[int | None] = [None] * len(faces)
    for start in range(len(faces)):
        if colors[start] is not None:
            continue
        colors[start] = 0
        queue = [start]
        while queue:
            f = queue.pop()
            for dart in faces[f]:
                neighbor = face_of[g.mate[dart]]
                if colors[neighbor] is None:
                    colors[neighbor] = 1 - colors[f]
                    queue.append(neighbor)
                elif colors[neighbor] == colors[f]:
                    return None
    return faces, face_of, colors


def goeritz_determinant(pd: PDCode) -> int:
    """|det| of the reduced Goeritz matrix of a checkerboard coloring.

    Crossingless circle: 1.  Split diagrams (disconnected 4-valent graph,
    including extra circles): 0, the determinant of any split link.
    """
    g = LinkGraph.from_pdcode(pd)
    n = len(g.over_diags)
    if n == 0:
        if len(g.loop_names) == 0:
            raise MalformedCodeError("empty diagram")
        return 1 if len(g.loop_names) == 1 else 0
    if g.connected_pieces() > 1:
        return 0
    colored = _checkerboard(g)
    if colored is None:
        raise NonPlanarCodeError("no checkerboard coloring exists")
    faces, face_of, colors = colored
    if len(faces) != n + 2:
        raise NonPlanarCodeError(
            f"Euler count failed: {len(faces)} faces for {n} crossings"
        )
    white = 0  # color class of face 0; either class gives the same |det|
    regions = [i for i, c in enumerate(colors) if c == white]
    index = {f: i for i, f in enumerate(regions)}
    m = len(regions)
    matrix = [[0] * m for _ in range(m)]
    for c in range(n):
        # corner i sits between slots i and i+1 and is the face of dart (c, i)
        corner_colors = [colors[face_of[(c, s)]] for s in range(4)]
        if corner_colors[0] == white:
            white_corners = (0, 2)
            w = 0
        else:
            white_corners = (1, 3)
            w = 1
        eta = 1 if (g.over_diags[c] + w) % 2 == 1 else -1
        u = index[face_of[(c, white_corners[0])]]
        v = index[face_of[(c, white_corners[1])]]
        if u != v:
            matrix[u][v] -= eta
            matrix[v][u] -= eta
    for i in range(m):
        matrix[i][i] = -sum(matrix[i][j] for j in range(m) if j != i)
    reduced = [row[1:] for row in matrix[1:]]
    return abs(bareiss_determinant(reduced))


def _arc_classes(g: LinkGraph, r) -> tuple[dict[Port, int], int]:
    """Union diagram edges through over-passes; arcs are the classes.

    Edges are identified by their head port.
    """
    parent: dict[Port, Port] = {}
    for edges in r.comp_edges:
        for _, head in edges:
            parent[head] = head

    def find(x: Port) -> Port:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(len(g.over_diags)):
        over_in = (c, r.over_in_slot(c))
        over_out_slot = (r.over_in_slot(c) + 2) % 4
        outgoing_head = g.mate[(c, over_out_slot)]
        ra, rb = find(over_in), find(outgoing_head)
        if ra != rb:
            parent[ra] = rb
    labels: dict[Port, int] = {}
    arc_of: dict[Port, int] = {}
    for head in parent:
        root = find(head)
        if root not in labels:
            labels[root] = len(labels)
        arc_of[head] = labels[root]
    return arc_of, len(labels)


def alexander(pd: PDCode) -> LaurentPoly:
    """Alexander polynomial from the crossing relations, normalized so the
    lowest exponent is 0 and the value at 1 (the leading coefficient for
    links) is positive.  Split links give the zero polynomial."""
    g = LinkGraph.from_pdcode(pd)
    n = len(g.over_diags)
    if n == 0:
        if len(g.loop_names) == 0:
            raise MalformedCodeError("empty diagram")
        return (
            LaurentPoly.const(1) if len(g.loop_names) == 1 else LaurentPoly(())
        )
    if g.connected_pieces() > 1:
        return LaurentPoly(())
    r = g.resolved()
    # A component that never passes under lies over everything it meets, so
    # the link is split.
    under_comps = set()
    comp_of_port = r.component_of_port()
    for c in range(n):
        under_comps.add(comp_of_port[(c, r.under_in_slot(c))])
    if len(under_comps) < len(r.comp_edges):
        return LaurentPoly(())
    arc_of, arc_count = _arc_classes(g, r)
    if arc_count != n:
        raise MalformedCodeError("arc count does not match crossing count")
    t = LaurentPoly.monomial(1)
    one = LaurentPoly.const(1)
    rows: list[list[LaurentPoly]] = []
    for c in range(n):
        coeffs: dict[int, LaurentPoly] = {}

        def add(arc: int, p: LaurentPoly) -> None:
            coeffs[arc] = coeffs.get(arc, LaurentPoly(())) + p

        s_in = r.under_in_slot(c)
        s_out = (s_in + 2) % 4
        arc_in = arc_of[(c, s_in)]
        arc_out = arc_of[g.mate[(c, s_out)]]
        arc_over = arc_of[(c, r.over_in_slot(c))]
        if r.crossing_sign(c) == 1:
            add(arc_in, t)
            add(arc_out, one.scale(-1))
        else:
            add(arc_in, one.scale(-1))
            add(arc_out, t)
        add(arc_over, one - t)
        rows.append([coeffs.get(a, LaurentPoly(())) for a in range(arc_count)])
    sub = [row[: arc_count - 1] for row in rows[: n - 1]]
    return poly_matrix_determinant(sub).normalized()
