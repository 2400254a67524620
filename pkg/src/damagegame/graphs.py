"""Immutable simple undirected graphs, BFS queries, and edge-list text I/O.

Vertices are dense 0-based integers.  Graphs generated from a family spec
additionally carry a landmark side table (see families.py); the Graph value
itself stays family-agnostic.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import (
    BadTokenError,
    DuplicateEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
    WrongEdgeCountError,
)

UNREACHABLE = -1


class Graph:
    """Simple undirected graph with sorted adjacency.

    Immutable after construction; safe to share across threads.  Do not call
    the constructor directly with unvalidated edges -- use build_graph().
    """

    __slots__ = ("n", "adj", "edge_count", "landmarks", "_adj_sets", "_csr")

    def __init__(self, n, adj, edge_count, landmarks=None):
        self.n = n
        self.adj = adj  # tuple of sorted tuples
        self.edge_count = edge_count
        self.landmarks = landmarks
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in adj)
        self._csr = None

    def degree(self, v):
        self.check_vertex(v)
        return len(self.adj[v])

    def max_degree(self):
        if self.n == 0:
            return 0
        return max(len(nbrs) for nbrs in self.adj)

    def has_edge(self, u, v):
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._adj_sets[u]

    def neighbors(self, v):
        self.check_vertex(v)
        return self.adj[v]

    def closed_neighborhood(self, v):
        self.check_vertex(v)
        return self._adj_sets[v] | {v}

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def check_vertex(self, v):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v!r} out of range 0..{self.n - 1}")

    def csr(self):
        """Adjacency in CSR form (indptr, indices), cached, for the kernels."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adj[v])
            indices = np.fromiter(
                (u for nbrs in self.adj for u in nbrs), dtype=np.int64, count=int(indptr[-1])
            )
            self._csr = (indptr, indices)
        return self._csr

    def relabel(self, perm):
        """Graph with vertex i renamed perm[i].  Landmarks are dropped."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return build_graph(self.n, edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n, edges, landmarks=None):
    """Validate and normalize an edge list into a Graph.

    Raises SelfLoopError, DuplicateEdgeError or VertexRangeError.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count {n} is negative")
    seen = set()
    adj = [[] for _ in range(n)]
    count = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj), count, landmarks)


def bfs_distances(graph, source, forbidden=frozenset()):
    """Distance from source to every vertex, UNREACHABLE where cut off."""
    graph.check_vertex(source)
    dist = [UNREACHABLE] * graph.n
    if source in forbidden:
        return dist
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in graph.adj[v]:
            if dist[u] == UNREACHABLE and u not in forbidden:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def distance(graph, u, v):
    """Exact BFS distance, or UNREACHABLE."""
    graph.check_vertex(v)
    return bfs_distances(graph, u)[v]


def shortest_path(graph, u, v, forbidden=frozenset()):
    """Shortest path from u to v avoiding forbidden vertices, or None.

    Ties are broken by always stepping to the lowest-id neighbor that still
    lies on some shortest path, so the result is deterministic.
    """
    graph.check_vertex(u)
    graph.check_vertex(v)
    if u in forbidden or v in forbidden:
        return None
    dist_to_target = bfs_distances(graph, v, forbidden)
    if dist_to_target[u] == UNREACHABLE:
        return None
    path = [u]
    cur = u
    while cur != v:
        cur = min(
            x
            for x in graph.adj[cur]
            if x not in forbidden and dist_to_target[x] == dist_to_target[cur] - 1
        )
        path.append(cur)
    return path


def is_connected(graph):
    if graph.n == 0:
        return True
    return bfs_distances(graph, 0).count(UNREACHABLE) == 0


def parse_edge_list(text):
    """Parse the "n m" header + "u v" lines format into a Graph.

    Errors carry the 1-based line number of the offending line.
    """
    lines = text.split("\n")
    # A trailing newline produces one empty trailing chunk; drop it.
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedHeaderError("empty input, expected 'n m' header", line=1)
    header = lines[0].split()
    if len(header) != 2:
        raise MalformedHeaderError(
            f"expected 'n m' header, got {lines[0]!r}", line=1
        )
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise MalformedHeaderError(
            f"header tokens must be integers, got {lines[0]!r}", line=1
        ) from None
    if n < 0 or m < 0:
        raise MalformedHeaderError("header values must be non-negative", line=1)
    edges = []
    for i, raw in enumerate(lines[1:], start=2):
        if len(edges) == m:
            raise WrongEdgeCountError(
                f"expected {m} edges but found extra line {raw!r}", line=i
            )
        tokens = raw.split()
        if len(tokens) != 2:
            raise BadTokenError(f"expected 'u v', got {raw!r}", line=i)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BadTokenError(f"token not an integer in {raw!r}", line=i) from None
        edges.append((u, v))
    if len(edges) != m:
        raise WrongEdgeCountError(
            f"header promised {m} edges but only {len(edges)} present",
            line=len(lines) + 1,
        )
    return build_graph(n, edges)


def serialize_edge_list(graph):
    """Normalized edge-list text: ASCII, newline-terminated, edges sorted."""
    out = [f"{graph.n} {graph.edge_count}"]
    out.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(out) + "\n"


def export_dot(graph, state=None):
    """Graphviz DOT text; best effort, not bit-exact.

    With a GameState, damaged vertices are filled red, the cop ringed blue,
    and live robbers ringed orange.
    """
    lines = ["graph damagegame {"]
    damaged = set()
    cop = None
    robber_verts = set()
    if state is not None:
        damaged = set(state.damaged)
        cop = state.cop
        robber_verts = {pos for pos in state.robbers if pos is not None}
    for v in range(graph.n):
        attrs = []
        if v in damaged:
            attrs.append('style=filled fillcolor="#e08080"')
        if v == cop:
            attrs.append('color="#2040c0" penwidth=3')
        elif v in robber_verts:
            attrs.append('color="#e0a000" penwidth=3')
        lines.append(f"  {v} [{' '.join(attrs)}];" if attrs else f"  {v};")
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
