"""Bounded-degree undirected graphs with stable ids and exact undo.

Vertices and edges are dense integer ids. Every mutation keeps the degree
cap of 4. ``remove_edge``/``restore_edge`` are exact inverses (including
adjacency-list order, provided removals are undone in reverse order), so a
driver can peel a graph apart and rebuild it bit for bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import (
    DegreeViolation,
    Disconnected,
    DuplicateEdge,
    InternalError,
    PreconditionViolated,
    SelfLoop,
    UnknownEdge,
)

MAX_DEGREE = 4


class Graph:
    """Simple undirected graph, maximum degree 4, journaled edge removal."""

    __slots__ = ("_adj", "_edges", "_present", "_m", "_restore_pos")

    def __init__(self, n=0):
        self._adj = [[] for _ in range(n)]
        self._edges = []  # eid -> (u, v), fixed at creation
        self._present = []  # eid -> bool
        self._m = 0
        self._restore_pos = {}  # eid -> (pos_u, pos_v) recorded at removal

    # ------------------------------------------------------------------ size
    @property
    def num_vertices(self):
        return len(self._adj)

    @property
    def num_edge_ids(self):
        """Total edge ids ever created, including removed ones."""
        return len(self._edges)

    @property
    def m(self):
        """Number of currently present edges."""
        return self._m

    # ------------------------------------------------------------- mutation
    def add_vertex(self):
        self._adj.append([])
        return len(self._adj) - 1

    def add_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"self loop at vertex {u}")
        if self.edge_id(u, v) is not None:
            raise DuplicateEdge(f"edge ({u},{v}) already present")
        if len(self._adj[u]) >= MAX_DEGREE:
            raise DegreeViolation(f"vertex {u} already has degree {MAX_DEGREE}")
        if len(self._adj[v]) >= MAX_DEGREE:
            raise DegreeViolation(f"vertex {v} already has degree {MAX_DEGREE}")
        eid = len(self._edges)
        self._edges.append((u, v))
        self._present.append(True)
        self._adj[u].append((v, eid))
        self._adj[v].append((u, eid))
        self._m += 1
        return eid

    def remove_edge(self, eid):
        self._check_present(eid)
        u, v = self._edges[eid]
        pu = self._position(u, eid)
        pv = self._position(v, eid)
        self._adj[u].pop(pu)
        self._adj[v].pop(pv)
        self._present[eid] = False
        self._restore_pos[eid] = (pu, pv)
        self._m -= 1

    def restore_edge(self, eid):
        if not (0 <= eid < len(self._edges)):
            raise UnknownEdge(f"edge id {eid} was never created")
        if self._present[eid]:
            raise UnknownEdge(f"edge id {eid} is not removed")
        u, v = self._edges[eid]
        pu, pv = self._restore_pos.pop(eid)
        if pu > len(self._adj[u]) or pv > len(self._adj[v]):
            raise InternalError("graph/restore", "restores must undo removals in reverse order")
        self._adj[u].insert(pu, (v, eid))
        self._adj[v].insert(pv, (u, eid))
        self._present[eid] = True
        self._m += 1

    # -------------------------------------------------------------- queries
    def endpoints(self, eid):
        self._check_present(eid)
        return self._edges[eid]

    def present(self, eid):
        return 0 <= eid < len(self._edges) and self._present[eid]

    def degree(self, v):
        self._check_vertex(v)
        return len(self._adj[v])

    def incident(self, v):
        """List of (neighbor, edge id) pairs at v, in insertion order."""
        self._check_vertex(v)
        return list(self._adj[v])

    def neighbors(self, v):
        self._check_vertex(v)
        return [w for w, _ in self._adj[v]]

    def edge_id(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        for w, eid in self._adj[u]:
            if w == v:
                return eid
        return None

    def has_edge(self, u, v):
        return self.edge_id(u, v) is not None

    def edges(self):
        """Yield (eid, u, v) for every present edge, in edge-id order."""
        for eid, (u, v) in enumerate(self._edges):
            if self._present[eid]:
                yield eid, u, v

    def max_degree(self):
        return max((len(a) for a in self._adj), default=0)

    def is_connected(self):
        n = len(self._adj)
        if n <= 1:
            return True
        seen = self._bfs(0)
        return len(seen) == n

    def components(self):
        """Vertex lists of the connected components, in order of smallest id."""
        n = len(self._adj)
        seen = [False] * n
        out = []
        for s in range(n):
            if seen[s]:
                continue
            comp = self._bfs(s)
            for v in comp:
                seen[v] = True
            out.append(sorted(comp))
        return out

    def copy(self):
        g = Graph()
        g._adj = [list(a) for a in self._adj]
        g._edges = list(self._edges)
        g._present = list(self._present)
        g._m = self._m
        g._restore_pos = dict(self._restore_pos)
        return g

    def _bfs(self, s):
        seen = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def _position(self, v, eid):
        for pos, (_, e) in enumerate(self._adj[v]):
            if e == eid:
                return pos
        raise UnknownEdge(f"edge id {eid} not incident to vertex {v}")

    def _check_vertex(self, v):
        if not (0 <= v < len(self._adj)):
            raise PreconditionViolated(f"unknown vertex {v}")

    def _check_present(self, eid):
        if not (0 <= eid < len(self._edges)) or not self._present[eid]:
            raise UnknownEdge(f"edge id {eid} not present")


# ------------------------------------------------------------------ formats
def parse_edge_list(text):
    """Parse the canonical edge-list format: "n m" then m lines "u v".

    Blank lines and '#' comments are ignored. Vertex indices are 0-based.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise PreconditionViolated("empty edge-list file")
    head = rows[0].split()
    if len(head) != 2:
        raise PreconditionViolated(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise PreconditionViolated(f"header must be 'n m', got {rows[0]!r}") from None
    if n < 0 or m < 0:
        raise PreconditionViolated("n and m must be non-negative")
    if len(rows) - 1 != m:
        raise PreconditionViolated(f"expected {m} edge lines, found {len(rows) - 1}")
    g = Graph(n)
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise PreconditionViolated(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise PreconditionViolated(f"bad edge line {line!r}") from None
        g.add_edge(u, v)
    return g


def format_edge_list(g):
    lines = [f"{g.num_vertices} {g.m}"]
    for _, u, v in g.edges():
        lines.append(f"{min(u, v)} {max(u, v)}")
    return "\n".join(lines) + "\n"


def induced_by_edges(g, edge_ids):
    """Subgraph on the given edge ids with compacted vertex ids.

    Returns (subgraph, vmap old->new, vlist new->old, elist new->old).
    """
    eids = sorted(edge_ids)
    vs = sorted({v for eid in eids for v in g.endpoints(eid)})
    vmap = {v: i for i, v in enumerate(vs)}
    sub = Graph(len(vs))
    for eid in eids:
        u, v = g.endpoints(eid)
        sub.add_edge(vmap[u], vmap[v])
    return sub, vmap, vs, eids


def induced_by_vertices(g, vertices):
    """Subgraph on a vertex set, keeping every present edge inside it."""
    vset = set(vertices)
    eids = [eid for eid, u, v in g.edges() if u in vset and v in vset]
    vs = sorted(vset)
    vmap = {v: i for i, v in enumerate(vs)}
    sub = Graph(len(vs))
    for eid in eids:
        u, v = g.endpoints(eid)
        sub.add_edge(vmap[u], vmap[v])
    return sub, vmap, vs, eids


# ------------------------------------------------------------------- blocks
@dataclass
class BlockDecomposition:
    """Biconnected components (edge partition) plus the block/cut-vertex tree."""

    blocks: list  # list[list[eid]]
    cut_vertices: list  # sorted vertex ids
    block_vertices: list = field(default_factory=list)  # per block, sorted
    tree_edges: list = field(default_factory=list)  # (block index, cut vertex)

    def blocks_at(self, v):
        return [bi for bi, cv in self.tree_edges if cv == v]


def blocks(g):
    """Biconnected components of a connected graph, iterative lowpoint DFS.

    Each block is a 2-connected subgraph or a single bridge edge; together
    they partition the present edges.
    """
    if not g.is_connected():
        raise Disconnected("blocks() requires a connected graph")
    n = g.num_vertices
    disc = [-1] * n
    low = [0] * n
    adj = g._adj
    estack = []
    out_blocks = []
    if n == 0 or g.m == 0:
        return BlockDecomposition([], [])

    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    frames = [[root, -1, 0]]  # vertex, parent edge id, adjacency cursor
    while frames:
        frame = frames[-1]
        v, peid, idx = frame
        lst = adj[v]
        advanced = False
        while idx < len(lst):
            w, eid = lst[idx]
            idx += 1
            if eid == peid:
                continue
            if disc[w] == -1:
                estack.append(eid)
                frame[2] = idx
                disc[w] = low[w] = timer
                timer += 1
                frames.append([w, eid, 0])
                advanced = True
                break
            if disc[w] < disc[v]:
                estack.append(eid)
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if advanced:
            continue
        frame[2] = idx
        frames.pop()
        if frames:
            u = frames[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                blk = []
                while True:
                    e = estack.pop()
                    blk.append(e)
                    if e == peid:
                        break
                out_blocks.append(sorted(blk))
    if estack:
        raise InternalError("graph/blocks", "edge stack not exhausted")

    out_blocks.sort(key=lambda blk: blk[0])
    block_vertices = []
    count = {}
    for blk in out_blocks:
        vs = sorted({x for eid in blk for x in g.endpoints(eid)})
        block_vertices.append(vs)
        for x in vs:
            count[x] = count.get(x, 0) + 1
    cuts = sorted(v for v, k in count.items() if k >= 2)
    cutset = set(cuts)
    tree = [(bi, v) for bi, vs in enumerate(block_vertices) for v in vs if v in cutset]
    return BlockDecomposition(out_blocks, cuts, block_vertices, tree)


# ------------------------------------------------------------------ padding
@dataclass
class PaddingRecord:
    """Pendant vertices/edges added so an extension site sees exact degrees."""

    base_vertices: int
    base_edges: int
    added_vertices: list = field(default_factory=list)
    added_edges: list = field(default_factory=list)
    targets: dict = field(default_factory=dict)  # original vertex -> padded degree

    def is_empty(self):
        return not self.added_edges


def pad_for_extension(g, x, y):
    """Pad with pendants so that deg(x)=2, deg(y)=3 and every neighbor of
    x or y (including fresh pendants) has degree 4.

    Pendants are attached first to x and y, then to all their neighbors.
    """
    if g.has_edge(x, y):
        raise PreconditionViolated("pad_for_extension: edge xy must be absent")
    if g.degree(x) > 2 or g.degree(y) > 3:
        raise PreconditionViolated(
            f"pad_for_extension: need deg(x)<=2 and deg(y)<=3, got {g.degree(x)}, {g.degree(y)}"
        )
    rec = PaddingRecord(g.num_vertices, g.num_edge_ids)

    def pend(z, target):
        while g.degree(z) < target:
            p = g.add_vertex()
            rec.added_vertices.append(p)
            rec.added_edges.append(g.add_edge(z, p))

    pend(x, 2)
    pend(y, 3)
    ring = sorted(set(g.neighbors(x)) | set(g.neighbors(y)))
    for z in ring:
        rec.targets[z] = MAX_DEGREE
        pend(z, MAX_DEGREE)
    rec.targets[x] = 2
    rec.targets[y] = 3
    return rec


def strip_padding(g, rec):
    """Exact inverse of pad_for_extension; reclaims the pendant ids."""
    for eid in reversed(rec.added_edges):
        g.remove_edge(eid)
        del g._restore_pos[eid]
    if len(g._edges) != rec.base_edges + len(rec.added_edges):
        raise InternalError("graph/strip-padding", "non-pad edges created after padding")
    del g._edges[rec.base_edges:]
    del g._present[rec.base_edges:]
    for p in reversed(rec.added_vertices):
        if p != len(g._adj) - 1 or g._adj[p]:
            raise InternalError("graph/strip-padding", "pad vertices must be stripped in order")
        g._adj.pop()
