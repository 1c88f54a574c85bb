"""Immutable simple graphs with precomputed metric data.

Vertices are the integers ``0..n-1``.  Vertex sets are stored as Python
ints used as bitmasks; :class:`VertexSet` is a thin immutable wrapper used at
API boundaries.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator


class GraphInputError(ValueError):
    """Malformed graph input (bad endpoint, self-loop, bad file)."""


class DisconnectedGraphError(GraphInputError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A subset of ``0..n-1`` with fixed-width bit semantics."""

    __slots__ = ("mask", "n")

    def __init__(self, n: int, members: Iterable[int] | int = 0):
        if isinstance(members, int):
            mask = members
        else:
            mask = 0
            for v in members:
                if not 0 <= v < n:
                    raise GraphInputError(f"vertex {v} out of range 0..{n - 1}")
                mask |= 1 << v
        if mask >> n:
            raise GraphInputError(f"mask has bits outside 0..{n - 1}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def _other(self, other: "VertexSet") -> int:
        if other.n != self.n:
            raise ValueError("vertex sets belong to graphs of different order")
        return other.mask

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | self._other(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & self._other(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & ~self._other(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    __invert__ = complement

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {sorted(self)})"

    def to_list(self) -> list[int]:
        return list(self)


def as_mask(s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    mask = 0
    for v in s:
        mask |= 1 << v
    return mask


class Graph:
    """Connected simple undirected graph.

    Attributes are read-only after construction:

    - ``adjacency``: sorted neighbour tuples
    - ``dist``: hop-count distance matrix
    - ``spcount``: number of shortest paths between each pair
    - ``adj_mask``: neighbourhood bitmasks
    - ``rings[u][k]``: bitmask of vertices at distance ``k`` from ``u``
    """

    __slots__ = ("n", "adjacency", "adj_mask", "dist", "spcount", "rings", "_interval")

    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        adjacency = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        if len(adjacency) != n:
            raise GraphInputError("adjacency length does not match vertex count")
        for u, nb in enumerate(adjacency):
            for v in nb:
                if not 0 <= v < n:
                    raise GraphInputError(f"endpoint {v} out of range 0..{n - 1}")
                if v == u:
                    raise GraphInputError(f"self-loop at vertex {u}")
                if u not in adjacency[v]:
                    raise GraphInputError(f"adjacency not symmetric at edge {u}-{v}")
        self._set("n", n)
        self._set("adjacency", adjacency)
        self._set("adj_mask", tuple(as_mask(nb) for nb in adjacency))
        dist, spcount = _all_pairs_bfs(n, adjacency)
        self._set("dist", dist)
        self._set("spcount", spcount)
        rings = []
        for u in range(n):
            ecc = max(dist[u]) if n else 0
            row = [0] * (ecc + 1)
            for w, d in enumerate(dist[u]):
                row[d] |= 1 << w
            rings.append(tuple(row))
        self._set("rings", tuple(rings))
        self._set("_interval", None)

    def _set(self, name, value):
        object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __getstate__(self):
        return {"n": self.n, "adjacency": self.adjacency}

    def __setstate__(self, state):
        Graph.__init__(self, state["n"], state["adjacency"])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertex_set(self, members: Iterable[int] | int = 0) -> VertexSet:
        return VertexSet(self.n, members)

    def interval(self, u: int, v: int) -> int:
        """Bitmask of all vertices lying on some shortest u,v-path (ends included)."""
        table = self._interval
        if table is None:
            table = self._build_intervals()
        return table[u][v]

    def _build_intervals(self):
        n, dist, rings = self.n, self.dist, self.rings
        table = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(u, n):
                d = dist[u][v]
                mask = 0
                for k in range(d + 1):
                    mask |= rings[u][k] & rings[v][d - k]
                table[u][v] = table[v][u] = mask
        table = tuple(tuple(row) for row in table)
        self._set("_interval", table)
        return table


def _all_pairs_bfs(n, adjacency):
    dist_rows = []
    count_rows = []
    for s in range(n):
        dist = [-1] * n
        count = [0] * n
        dist[s] = 0
        count[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                if dist[w] == dist[u] + 1:
                    count[w] += count[u]
        if -1 in dist:
            raise DisconnectedGraphError("graph must be connected")
        dist_rows.append(tuple(dist))
        count_rows.append(tuple(count))
    return tuple(dist_rows), tuple(count_rows)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a :class:`Graph` on ``n`` vertices; duplicate edges are merged."""
    if n < 1:
        raise GraphInputError("graph needs at least one vertex")
    adjacency = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        adjacency[u].add(v)
        adjacency[v].add(u)
    return Graph(n, adjacency)


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise GraphInputError("empty edge list: missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def on_some_shortest_path(g: Graph, u: int, v: int, w: int) -> bool:
    return g.dist[u][w] + g.dist[w][v] == g.dist[u][v]


def count_shortest_paths(g: Graph, u: int, v: int) -> int:
    return g.spcount[u][v]


def is_isometric_subgraph(g: Graph, subset: VertexSet | Iterable[int]) -> bool:
    """True iff the subgraph induced by ``subset`` preserves all distances of ``g``."""
    mask = as_mask(subset)
    members = list(bits(mask))
    for s in members:
        # BFS inside the induced subgraph
        seen = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj_mask[u] & mask):
                if w not in seen:
                    seen[w] = seen[u] + 1
                    queue.append(w)
        for t in members:
            if seen.get(t) != g.dist[s][t]:
                return False
    return True


def _is_clique(g: Graph, mask: int) -> bool:
    return all(g.adj_mask[a] >> b & 1 for a, b in combinations(bits(mask), 2))


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose open neighbourhood induces a complete graph."""
    mask = 0
    for v in range(g.n):
        if _is_clique(g, g.adj_mask[v]):
            mask |= 1 << v
    return VertexSet(g.n, mask)


def claw_centers(g: Graph) -> VertexSet:
    """Vertices with three pairwise non-adjacent neighbours (centres of an induced K_{1,3})."""
    mask = 0
    for v in range(g.n):
        nb = g.adjacency[v]
        for a, b, c in combinations(nb, 3):
            am = g.adj_mask[a]
            if not (am >> b & 1 or am >> c & 1 or g.adj_mask[b] >> c & 1):
                mask |= 1 << v
                break
    return VertexSet(g.n, mask)
