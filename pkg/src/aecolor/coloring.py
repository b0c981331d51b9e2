"""Partial proper edge colorings, palette views, and the acyclicity verifier.

Assignment enforces properness eagerly (a color must be a candidate for the
edge) but never acyclicity; bichromatic-cycle checks are explicit so that a
driver bug cannot hide behind silent re-validation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlreadyColored,
    InvalidPair,
    NotACandidate,
    PreconditionViolated,
    UnknownEdge,
)

PALETTE_SIZES = (6, 7)


@dataclass
class Violation:
    """Why a coloring is not a proper acyclic coloring."""

    kind: str  # "improper" | "cycle"
    pair: tuple  # the clashing color or the two cycle colors
    edges: tuple = ()
    vertices: tuple = ()

    def __str__(self):
        if self.kind == "improper":
            return f"improper: edges {self.edges} share color {self.pair[0]} at vertex {self.vertices[0]}"
        cyc = " ".join(str(v) for v in self.vertices)
        return f"bichromatic ({self.pair[0]},{self.pair[1]}) cycle: {cyc}"


class PartialEdgeColoring:
    """Map edge id -> color over a fixed palette of 6 or 7 colors.

    Color 0 means uncolored. Colors 1..6 are the working palette of the
    6-color routine; color 7 exists only for the 7-color driver.
    """

    __slots__ = ("graph", "palette_size", "_colors")

    def __init__(self, graph, palette_size=6):
        if palette_size not in PALETTE_SIZES:
            raise PreconditionViolated(f"palette size must be one of {PALETTE_SIZES}")
        self.graph = graph
        self.palette_size = palette_size
        self._colors = [0] * graph.num_edge_ids

    # ------------------------------------------------------------- plumbing
    def _grow(self):
        need = self.graph.num_edge_ids - len(self._colors)
        if need > 0:
            self._colors.extend([0] * need)

    def trim(self):
        """Drop color slots for edge ids the graph has reclaimed."""
        del self._colors[self.graph.num_edge_ids:]

    def color(self, eid):
        if not (0 <= eid < len(self._colors)):
            if 0 <= eid < self.graph.num_edge_ids:
                return 0
            raise UnknownEdge(f"edge id {eid} unknown")
        return self._colors[eid]

    def is_colored(self, eid):
        return self.color(eid) != 0

    def colored_count(self):
        return sum(1 for c in self._colors if c)

    def is_total(self):
        return all(self._colors[eid] for eid, _, _ in self.graph.edges())

    def used_colors(self):
        return sorted({c for c in self._colors if c})

    def _check_color(self, k):
        if not (1 <= k <= self.palette_size):
            raise PreconditionViolated(f"color {k} outside palette 1..{self.palette_size}")

    def _set_raw(self, eid, k):
        self._grow()
        self._colors[eid] = k

    # -------------------------------------------------------------- updates
    def assign(self, eid, k):
        """Color an uncolored edge with a candidate color."""
        if not self.graph.present(eid):
            raise UnknownEdge(f"edge id {eid} not present")
        self._grow()
        if self._colors[eid]:
            raise AlreadyColored(f"edge {eid} already has color {self._colors[eid]}")
        self._check_color(k)
        u, v = self.graph.endpoints(eid)
        colors = self._colors
        for _, e in self.graph._adj[u]:
            if colors[e] == k:
                raise NotACandidate(f"color {k} already at vertex {u}")
        for _, e in self.graph._adj[v]:
            if colors[e] == k:
                raise NotACandidate(f"color {k} already at vertex {v}")
        colors[eid] = k

    def unassign(self, eid):
        if not self.graph.present(eid):
            raise UnknownEdge(f"edge id {eid} not present")
        self._grow()
        if not self._colors[eid]:
            raise PreconditionViolated(f"edge {eid} is not colored")
        self._colors[eid] = 0

    # -------------------------------------------------------- palette views
    def F(self, u):
        """Set of colors on colored edges incident to u."""
        colors = self._colors
        return {colors[e] for _, e in self.graph._adj[u] if colors[e]}

    def S(self, a, b):
        """F(b) minus the color of edge ab; asymmetric in a and b."""
        eid = self.graph.edge_id(a, b)
        if eid is None:
            raise UnknownEdge(f"no edge ({a},{b})")
        self._grow()
        if not self._colors[eid]:
            raise PreconditionViolated(f"S({a},{b}) needs edge ({a},{b}) colored")
        out = self.F(b)
        out.discard(self._colors[eid])
        return out

    def candidates(self, eid):
        """Palette colors absent from both endpoints of an uncolored edge."""
        if not self.graph.present(eid):
            raise UnknownEdge(f"edge id {eid} not present")
        self._grow()
        if self._colors[eid]:
            raise AlreadyColored(f"edge {eid} already colored")
        u, v = self.graph.endpoints(eid)
        taken = self.F(u) | self.F(v)
        return [k for k in range(1, self.palette_size + 1) if k not in taken]

    # ----------------------------------------------------------- the checks
    def find_bichromatic_cycle(self, alpha, beta):
        """Vertices of an (alpha,beta)-alternating cycle, or None.

        The (alpha,beta) subgraph has maximum degree 2 under properness, so
        one walk per component suffices.
        """
        self._check_color(alpha)
        self._check_color(beta)
        if alpha == beta:
            raise InvalidPair("bichromatic pair must be two distinct colors")
        self._grow()
        colors = self._colors
        adj = self.graph._adj
        seen = set()
        for eid, u, v in self.graph.edges():
            if colors[eid] not in (alpha, beta) or u in seen:
                continue
            cyc = self._component_cycle(adj, colors, alpha, beta, u, seen)
            if cyc is not None:
                return cyc
        return None

    def _component_cycle(self, adj, colors, alpha, beta, s, seen):
        # Walk from s along its component; a return to s closes a cycle.
        seen.add(s)
        sub = [(w, e) for w, e in adj[s] if colors[e] in (alpha, beta)]
        if not sub:
            return None

        def sweep(first, mark_only):
            path = [s]
            cur, arrived = first
            prev_color = colors[arrived]
            while True:
                if cur == s:
                    return path
                if mark_only and cur in seen:
                    return None
                seen.add(cur)
                path.append(cur)
                nxt = None
                for w, e in adj[cur]:
                    if e != arrived and colors[e] in (alpha, beta) and colors[e] != prev_color:
                        nxt = (w, e)
                        break
                if nxt is None:
                    return None
                cur, arrived = nxt
                prev_color = colors[arrived]

        cyc = sweep(sub[0], mark_only=False)
        if cyc is not None:
            return cyc
        if len(sub) > 1:
            sweep(sub[1], mark_only=True)
        return None

    def verify_acyclic(self):
        """None if proper and free of bichromatic cycles, else a Violation."""
        self._grow()
        colors = self._colors
        for v in range(self.graph.num_vertices):
            seen = {}
            for _, e in self.graph._adj[v]:
                c = colors[e]
                if not c:
                    continue
                if c in seen:
                    return Violation("improper", (c,), (seen[c], e), (v,))
                seen[c] = e
        used = self.used_colors()
        for i, a in enumerate(used):
            for b in used[i + 1:]:
                cyc = self.find_bichromatic_cycle(a, b)
                if cyc is not None:
                    return Violation("cycle", (a, b), (), tuple(cyc))
        return None

    # ------------------------------------------------------------ serialize
    def to_text(self):
        """Lines "u v color" for colored edges, then "palette k"."""
        lines = []
        for eid, u, v in self.graph.edges():
            c = self.color(eid)
            if c:
                lines.append(f"{min(u, v)} {max(u, v)} {c}")
        lines.append(f"palette {self.palette_size}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, graph, text):
        palette = None
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("palette"):
                palette = int(line.split()[1])
                continue
            parts = line.split()
            if len(parts) != 3:
                raise PreconditionViolated(f"bad coloring line {line!r}")
            rows.append((int(parts[0]), int(parts[1]), int(parts[2])))
        if palette is None:
            raise PreconditionViolated("coloring file missing 'palette k' line")
        col = cls(graph, palette)
        for u, v, k in rows:
            eid = graph.edge_id(u, v)
            if eid is None:
                raise UnknownEdge(f"coloring mentions absent edge ({u},{v})")
            col.assign(eid, k)
        return col

    def copy(self):
        out = PartialEdgeColoring(self.graph, self.palette_size)
        out._colors = list(self._colors)
        return out

    def same_colors(self, other):
        self._grow()
        other._grow()
        return self.palette_size == other.palette_size and self._colors == other._colors
