"""Seeded Reidemeister-1/2 insertions for invariance testing.

Insertions only ever add crossings, so the link type (and each component's
orientation, which is pinned through the rewiring) is preserved.  R2 fingers
are pushed across a face of the diagram's rotation system, keeping the code
planar by construction.
"""

from __future__ import annotations

import random

from .diagrams import LinkGraph, PDCode, Port


def _pin_all_orientations(g: LinkGraph) -> None:
    r = g.resolved()
    g.hints = dict(r.incoming)


def _edge_key(g: LinkGraph, end) -> frozenset:
    return frozenset((end, g.mate[end]))


def _insert_r1_on_loop(g: LinkGraph, loop_index: int, over_diag: int) -> None:
    name = g.loop_names.pop(loop_index)
    c = g.new_crossing(over_diag)
    g.mate[(c, 0)] = (c, 1)
    g.mate[(c, 1)] = (c, 0)
    g.mate[(c, 2)] = (c, 3)
    g.mate[(c, 3)] = (c, 2)
    g.hints.update({(c, 0): True, (c, 2): False, (c, 3): True, (c, 1): False})
    if name is not None:
        for s in range(4):
            g.name_hints[(c, s)] = name


def _insert_r1(g: LinkGraph, end, over_diag: int) -> None:
    """Kink on the edge holding `end`; the strand enters slot 0, loops 2-3,
    exits slot 1."""
    other = g.mate[end]
    head, tail = (end, other) if g.hints[end] else (other, end)
    c = g.new_crossing(over_diag)
    g.mate.pop(head)
    g.mate.pop(tail)
    g.mate[tail] = (c, 0)
    g.mate[(c, 0)] = tail
    g.mate[(c, 2)] = (c, 3)
    g.mate[(c, 3)] = (c, 2)
    g.mate[(c, 1)] = head
    g.mate[head] = (c, 1)
    g.hints.update({(c, 0): True, (c, 2): False, (c, 3): True, (c, 1): False})
    name = g.name_hints.get(head) or g.name_hints.get(tail)
    if name is not None:
        for s in range(4):
            g.name_hints[(c, s)] = name


def _insert_r2(g: LinkGraph, dart_beta: Port, dart_gamma: Port, gamma_over: bool) -> None:
    """Push a finger of the gamma edge across their common face, over (or
    under) the beta edge.  Both darts must lie on the same face and on
    distinct edges.

    The face walk (LinkGraph.faces) keeps the face on the right of each dart,
    so with beta walked upward the face sits east of it and gamma approaches
    from the east; the cap lands west of beta, inside the neighboring face.
    """
    p_n = dart_beta
    p_s = g.mate[p_n]
    q_s = dart_gamma
    q_n = g.mate[q_s]
    od = 0 if gamma_over else 1
    c_lo = g.new_crossing(od)
    c_up = g.new_crossing(od)
    for end in (p_n, p_s, q_n, q_s):
        g.mate.pop(end)
    wiring = [
        (p_s, (c_lo, 1)),
        ((c_lo, 3), (c_up, 1)),
        ((c_up, 3), p_n),
        (q_s, (c_lo, 2)),
        ((c_lo, 0), (c_up, 0)),
        ((c_up, 2), q_n),
    ]
    for a, b in wiring:
        g.mate[a] = b
        g.mate[b] = a
    if g.hints[p_n]:  # beta flows toward p_n
        g.hints.update(
            {(c_lo, 1): True, (c_lo, 3): False, (c_up, 1): True, (c_up, 3): False}
        )
    else:
        g.hints.update(
            {(c_lo, 1): False, (c_lo, 3): True, (c_up, 1): False, (c_up, 3): True}
        )
    if g.hints[q_s]:  # gamma flows toward q_s
        g.hints.update(
            {(c_up, 2): True, (c_up, 0): False, (c_lo, 0): True, (c_lo, 2): False}
        )
    else:
        g.hints.update(
            {(c_up, 2): False, (c_up, 0): True, (c_lo, 0): False, (c_lo, 2): True}
        )
    beta_name = g.name_hints.get(p_n) or g.name_hints.get(p_s)
    gamma_name = g.name_hints.get(q_s) or g.name_hints.get(q_n)
    for s in (1, 3):
        if beta_name is not None:
            g.name_hints[(c_lo, s)] = beta_name
            g.name_hints[(c_up, s)] = beta_name
    for s in (0, 2):
        if gamma_name is not None:
            g.name_hints[(c_lo, s)] = gamma_name
            g.name_hints[(c_up, s)] = gamma_name


def perturb(pd: PDCode, seed: int, moves: int) -> PDCode:
    """Apply `moves` seeded R1/R2 insertions; never removes crossings."""
    g = LinkGraph.from_pdcode(pd)
    _pin_all_orientations(g)
    rng = random.Random(seed)
    for _ in range(moves):
        g._resolved = None
        ends = sorted(e for e in g.mate if e[0] != "t")
        want_r2 = rng.random() < 0.5 and len(g.over_diags) > 0
        done = False
        if want_r2:
            faces = g.faces()
            rng.shuffle(faces)
            for face in faces:
                if len(face) < 2:
                    continue
                pairs = [
                    (i, j)
                    for i in range(len(face))
                    for j in range(len(face))
                    if i != j
                    and _edge_key(g, face[i]) != _edge_key(g, face[j])
                ]
                if not pairs:
                    continue
                i, j = pairs[rng.randrange(len(pairs))]
                _insert_r2(g, face[i], face[j], rng.random() < 0.5)
                done = True
                break
        if not done:
            if ends:
                end = ends[rng.randrange(len(ends))]
                _insert_r1(g, end, rng.randrange(2))
            elif g.loop_names:
                _insert_r1_on_loop(g, rng.randrange(len(g.loop_names)), rng.randrange(2))
            else:
                raise ValueError("cannot perturb an empty diagram")
    g._resolved = None
    return g.resolve().to_pdcode()
