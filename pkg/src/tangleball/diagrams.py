"""Planar diagram codes and the underlying 4-valent diagram graph.

A PDCode lists crossings as quadruples X(a,b,c,d) of arc labels, read
counterclockwise starting at the incoming understrand, plus a partition of the
arc labels into named oriented cycles (one per link component).  Components
with an empty cycle are crossingless circles.

LinkGraph is the working representation: crossings with a counterclockwise
slot order (0..3, strand pairs occupy opposite slots) and an involution puting
the two ends of every diagram edge.  It is the shared substrate for tangle
closure diagrams, projections, Reidemeister insertions and the invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MalformedCodeError

Port = tuple[int, int]  # (crossing index, slot); slots are CCW


@dataclass(frozen=True)
class PDCode:
    """Immutable planar diagram code."""

    crossings: tuple[tuple[int, int, int, int], ...]
    components: tuple[tuple[str, tuple[int, ...]], ...]

    def component_names(self) -> list[str]:
        return [name for name, _ in self.components]

    def component_dict(self) -> dict[str, tuple[int, ...]]:
        return dict(self.components)

    def to_text(self) -> str:
        lines = [f"X {a} {b} {c} {d}" for a, b, c, d in self.crossings]
        for name, cycle in self.components:
            lines.append(f"C {name}: " + " ".join(str(a) for a in cycle))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "PDCode":
        crossings: list[tuple[int, int, int, int]] = []
        components: list[tuple[str, tuple[int, ...]]] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("X"):
                parts = line.split()
                if len(parts) != 5:
                    raise MalformedCodeError(f"bad crossing line: {raw!r}")
                crossings.append(tuple(int(x) for x in parts[1:]))  # type: ignore[arg-type]
            elif line.startswith("C"):
                head, _, rest = line.partition(":")
                name = head[1:].strip()
                if not name:
                    raise MalformedCodeError(f"component line missing name: {raw!r}")
                cycle = tuple(int(x) for x in rest.split())
                components.append((name, cycle))
            else:
                raise MalformedCodeError(f"unrecognized line: {raw!r}")
        pd = PDCode(tuple(crossings), tuple(components))
        pd.validate()
        return pd

    def validate(self) -> None:
        """Check structural invariants; raises MalformedCodeError."""
        counts: dict[int, int] = {}
        for quad in self.crossings:
            for a in quad:
                counts[a] = counts.get(a, 0) + 1
        for a, k in counts.items():
            if k != 2:
                raise MalformedCodeError(f"arc label {a} appears {k} times, not 2")
        declared: dict[int, str] = {}
        for name, cycle in self.components:
            for a in cycle:
                if a in declared:
                    raise MalformedCodeError(f"arc {a} declared in two components")
                declared[a] = name
        if set(declared) != set(counts):
            raise MalformedCodeError("component cycles do not partition the arcs")
        # Traversal consistency: resolving the graph must reproduce the cycles.
        LinkGraph.from_pdcode(self)


def _cycle_key(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical rotation of a cyclic sequence."""
    if not cycle:
        return cycle
    best = None
    for i in range(len(cycle)):
        rot = cycle[i:] + cycle[:i]
        if best is None or rot < best:
            best = rot
    return best


@dataclass
class LinkGraph:
    """Mutable 4-valent diagram graph with crossingless loops."""

    over_diags: list[int] = field(default_factory=list)  # 0: slots (0,2) over
    mate: dict = field(default_factory=dict)  # endpoint -> endpoint involution
    loop_names: list[str | None] = field(default_factory=list)
    hints: dict[Port, bool] = field(default_factory=dict)  # True: directed into port
    name_hints: dict[Port, str] = field(default_factory=dict)
    _serial: int = 0
    _resolved: "ResolvedDiagram | None" = None

    def resolved(self) -> "ResolvedDiagram":
        if self._resolved is None:
            self._resolved = self.resolve()
        return self._resolved

    # -- construction primitives -------------------------------------------

    def new_crossing(self, over_diag: int) -> int:
        self.over_diags.append(over_diag)
        return len(self.over_diags) - 1

    def fresh_token(self):
        self._serial += 1
        return ("t", self._serial)

    def new_strand(self):
        """A portless open segment; returns its two open ends."""
        t1, t2 = self.fresh_token(), self.fresh_token()
        self.mate[t1] = t2
        self.mate[t2] = t1
        return t1, t2

    def expose(self, port: Port):
        token = self.fresh_token()
        self.mate[port] = token
        self.mate[token] = port
        return token

    def attach(self, port: Port, token) -> None:
        other = self.mate.pop(token)
        self.mate[port] = other
        self.mate[other] = port

    def join(self, t1, t2, loop_name: str | None = None) -> None:
        m1 = self.mate.pop(t1)
        if m1 == t2:
            self.mate.pop(t2)
            self.loop_names.append(loop_name)
            return
        m2 = self.mate.pop(t2)
        self.mate[m1] = m2
        self.mate[m2] = m1

    # -- conversion ---------------------------------------------------------

    @staticmethod
    def from_pdcode(pd: PDCode) -> "LinkGraph":
        g = LinkGraph()
        label_ports: dict[int, list[Port]] = {}
        for quad in pd.crossings:
            cid = g.new_crossing(1)  # quadruples start at the incoming under slot
            for slot, label in enumerate(quad):
                label_ports.setdefault(label, []).append((cid, slot))
            g.hints[(cid, 0)] = True
            g.hints[(cid, 2)] = False
        for label, ports in label_ports.items():
            if len(ports) != 2:
                raise MalformedCodeError(f"arc label {label} appears {len(ports)} times")
            a, b = ports
            g.mate[a] = b
            g.mate[b] = a
        declared_names: dict[int, str] = {}
        for name, cycle in pd.components:
            if not cycle:
                g.loop_names.append(name)
                continue
            for label in cycle:
                declared_names[label] = name
        for label, ports in label_ports.items():
            name = declared_names.get(label)
            if name is None:
                raise MalformedCodeError(f"arc {label} not declared in any component")
            for p in ports:
                g.name_hints[p] = name
        resolved = g.resolve()
        # Reproduce the declared cycles (cyclically).  Components that never
        # pass under have no direction pinned by the quadruples; re-walk those
        # backwards before declaring a mismatch.
        derived = {
            name: (idx, cycle)
            for idx, (name, cycle) in enumerate(resolved.pd_components(label_ports))
        }
        for name, cycle in pd.components:
            if not cycle:
                continue
            if name not in derived:
                raise MalformedCodeError(f"component {name!r} not found by traversal")
            idx, got = derived[name]
            if _cycle_key(cycle) == _cycle_key(got):
                continue
            has_hint = any(
                p in g.hints for tail, head in resolved.comp_edges[idx] for p in (tail, head)
            )
            if not has_hint:
                resolved.reverse_component(idx)
                got = resolved.pd_components(label_ports)[idx][1]
                if _cycle_key(cycle) == _cycle_key(got):
                    continue
            raise MalformedCodeError(
                f"component {name!r} cycle does not match the crossing pairings"
            )
        g._resolved = resolved
        return g

    def ports(self) -> list[Port]:
        return [(c, s) for c in range(len(self.over_diags)) for s in range(4)]

    def faces(self) -> list[list[Port]]:
        """Face orbits of the rotation system; each dart is (crossing, slot)
        read as 'walking along the edge into this port'."""
        next_dart: dict[Port, Port] = {}
        for c, s in self.ports():
            out_port = (c, (s + 1) % 4)
            next_dart[(c, s)] = self.mate[out_port]
        faces = []
        seen: set[Port] = set()
        for start in self.ports():
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                d = next_dart[d]
            faces.append(face)
        return faces

    def connected_pieces(self) -> int:
        """Connected pieces of the 4-valent graph, counting crossingless loops."""
        n = len(self.over_diags)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for port, other in self.mate.items():
            a, b = port[0], other[0]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        pieces = len({find(i) for i in range(n)}) if n else 0
        return pieces + len(self.loop_names)

    def resolve(self) -> "ResolvedDiagram":
        """Orient every edge and split the diagram into components.

        Components containing a hinted port follow the hint; others take the
        direction making the smallest port incoming.
        """
        for endpoint in self.mate:
            if not (isinstance(endpoint, tuple) and endpoint[0] != "t"):
                raise MalformedCodeError("diagram has unclosed open ends")
        incoming: dict[Port, bool] = {}
        comp_of_edge: dict[frozenset, int] = {}
        comp_edges: list[list[tuple[Port, Port]]] = []  # directed (tail, head)
        starts = sorted((p for p, into in self.hints.items() if into)) + sorted(
            self.ports()
        )
        for head0 in starts:
            if head0 in incoming:
                continue
            edges: list[tuple[Port, Port]] = []
            head = head0
            while True:
                tail = self.mate[head]
                if head in incoming:
                    break
                incoming[head] = True
                incoming[tail] = False
                edges.append((tail, head))
                c, s = head
                out = (c, (s + 2) % 4)
                head = self.mate[out]
            if edges:
                idx = len(comp_edges)
                comp_edges.append(edges)
                for tail, head in edges:
                    comp_of_edge[frozenset((tail, head))] = idx
        if len(incoming) != 4 * len(self.over_diags):
            raise MalformedCodeError("traversal did not cover every port")
        return ResolvedDiagram(self, incoming, comp_edges)


@dataclass
class ResolvedDiagram:
    """A LinkGraph with a chosen orientation on every component."""

    graph: LinkGraph
    incoming: dict[Port, bool]
    comp_edges: list[list[tuple[Port, Port]]]

    def reverse_component(self, idx: int) -> None:
        edges = self.comp_edges[idx]
        edges.reverse()
        for i, (tail, head) in enumerate(edges):
            edges[i] = (head, tail)
            self.incoming[head] = False
            self.incoming[tail] = True

    def component_name(self, idx: int) -> str | None:
        for tail, head in self.comp_edges[idx]:
            for p in (tail, head):
                if p in self.graph.name_hints:
                    return self.graph.name_hints[p]
        return None

    def under_in_slot(self, c: int) -> int:
        o = self.graph.over_diags[c]
        s1, s2 = (1, 3) if o == 0 else (0, 2)
        return s1 if self.incoming[(c, s1)] else s2

    def over_in_slot(self, c: int) -> int:
        o = self.graph.over_diags[c]
        s1, s2 = (0, 2) if o == 0 else (1, 3)
        return s1 if self.incoming[(c, s1)] else s2

    def crossing_sign(self, c: int) -> int:
        """Right-handed crossings are positive: the over strand enters at the
        slot counterclockwise-adjacent-behind the incoming under slot."""
        s_under = self.under_in_slot(c)
        return 1 if self.over_in_slot(c) == (s_under + 3) % 4 else -1

    def arc_labels(self) -> dict[Port, int]:
        labels: dict[Port, int] = {}
        label = 0
        for edges in self.comp_edges:
            for tail, head in edges:
                label += 1
                labels[tail] = label
                labels[head] = label
        return labels

    def pd_components(
        self, label_ports: dict[int, list[Port]]
    ) -> list[tuple[str, tuple[int, ...]]]:
        """Component cycles using pre-assigned labels (validation path)."""
        port_label = {}
        for lab, ports in label_ports.items():
            for p in ports:
                port_label[p] = lab
        out = []
        for idx, edges in enumerate(self.comp_edges):
            name = self.component_name(idx) or f"k{idx}"
            out.append((name, tuple(port_label[head] for _, head in edges)))
        return out

    def to_pdcode(self) -> PDCode:
        labels = self.arc_labels()
        quads = []
        for c in range(len(self.graph.over_diags)):
            s = self.under_in_slot(c)
            quads.append(
                (
                    labels[(c, s)],
                    labels[(c, (s + 1) % 4)],
                    labels[(c, (s + 2) % 4)],
                    labels[(c, (s + 3) % 4)],
                )
            )
        components: list[tuple[str, tuple[int, ...]]] = []
        used: set[str] = set()
        for idx, edges in enumerate(self.comp_edges):
            name = self.component_name(idx) or f"k{idx}"
            if name in used:
                raise MalformedCodeError(f"duplicate component name {name!r}")
            used.add(name)
            components.append((name, tuple(labels[head] for _, head in edges)))
        for i, name in enumerate(self.graph.loop_names):
            final = name or f"o{i}"
            if final in used:
                raise MalformedCodeError(f"duplicate component name {final!r}")
            used.add(final)
            components.append((final, ()))
        return PDCode(tuple(quads), tuple(components))

    def component_of_port(self) -> dict[Port, int]:
        out = {}
        for idx, edges in enumerate(self.comp_edges):
            for tail, head in edges:
                out[tail] = idx
                out[head] = idx
        return out
