"""Structural queries: induced stars, great cycles, triangle checks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import LandmarkError
from .graphs import Graph

EXACT_STAR_LIMIT = 32  # exhaustive neighborhood search up to this graph size


def find_induced_star(graph: Graph, t: int):
    """Find a vertex with t pairwise non-adjacent neighbors.

    Returns (center, leaves) with leaves sorted, or None.  Exhaustive inside
    each neighborhood for graphs with n <= 32; on larger graphs a greedy pass
    runs first and the exhaustive search only as fallback.  Absence is an
    empty result, not an error.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    for center in range(graph.n):
        nbrs = graph.adj[center]
        if len(nbrs) < t:
            continue
        if graph.n > EXACT_STAR_LIMIT:
            leaves = _greedy_independent(graph, nbrs, t)
            if leaves is not None:
                return center, leaves
        leaves = _exact_independent(graph, nbrs, t)
        if leaves is not None:
            return center, leaves
    return None


def _greedy_independent(graph, candidates, t):
    chosen = []
    for v in candidates:
        if all(not graph.has_edge(v, c) for c in chosen):
            chosen.append(v)
            if len(chosen) == t:
                return tuple(chosen)
    return None


def _exact_independent(graph, candidates, t):
    """Backtracking search for an independent set of size t among candidates."""
    chosen = []

    def extend(start):
        if len(chosen) == t:
            return True
        # not enough candidates left to finish
        if len(chosen) + (len(candidates) - start) < t:
            return False
        for idx in range(start, len(candidates)):
            v = candidates[idx]
            if all(not graph.has_edge(v, c) for c in chosen):
                chosen.append(v)
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return tuple(sorted(chosen))
    return None


def has_triangle(graph: Graph):
    """Brute-force triangle test."""
    for u in range(graph.n):
        for v in graph.adj[u]:
            if v <= u:
                continue
            for x in graph.adj[v]:
                if x > v and graph.has_edge(u, x):
                    return True
    return False


@dataclass(frozen=True)
class GreatCycle:
    """A chordless 14-cycle through both hubs, built from two paths."""

    path_indices: tuple[int, int]  # 0-based generating path pair, i < j
    vertices: tuple[int, ...]  # cyclic order, starts at v1, length 14

    def __len__(self):
        return len(self.vertices)


def is_chordless_cycle(graph: Graph, vertices):
    """Independent check: consecutive pairs adjacent, all others not."""
    k = len(vertices)
    if len(set(vertices)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            adjacent = graph.has_edge(vertices[a], vertices[b])
            consecutive = b - a == 1 or (a == 0 and b == k - 1)
            if adjacent != consecutive:
                return False
    return True


def great_cycles(graph: Graph):
    """All great cycles of a generated hub graph, ascending by path pair.

    For gprime every path pair qualifies; for g only pairs from different
    matched blocks (i // 2 != j // 2).  Every returned cycle is re-checked
    chordless against the adjacency itself.
    """
    lm = graph.landmarks
    if lm is None or lm.family not in ("gprime", "g"):
        raise LandmarkError("great_cycles needs a graph generated as gprime or g")
    cycles = []
    for i, j in combinations(range(lm.param), 2):
        if lm.family == "g" and i // 2 == j // 2:
            continue
        verts = (lm.v1,) + lm.paths[i] + (lm.v2,) + tuple(reversed(lm.paths[j]))
        if not is_chordless_cycle(graph, verts):
            raise AssertionError(
                f"generated cycle for paths ({i}, {j}) is not chordless"
            )
        cycles.append(GreatCycle(path_indices=(i, j), vertices=verts))
    return cycles
