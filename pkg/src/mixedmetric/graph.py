"""Immutable simple graphs, breadth-first distances, and scalar invariants.

Vertices are the integers 0..n-1 and edges are stored canonically as
(min, max) pairs.  Every analysis entry point in the package assumes the
graph is connected, so connectedness is enforced at construction time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    SelfLoopError,
    TooSmallError,
    UnknownElementError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int]
# An element of a graph is either a vertex id or a canonical edge.
Element = int | Edge


def canonical_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered (min, max) pair."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Connected simple undirected graph; build instances via build_graph."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphStats:
    """Counting invariants of a connected graph."""

    leaf_set: frozenset[int]
    l1: int
    cyclomatic: int
    min_degree: int
    is_3_connected: bool


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and return the canonical connected Graph.

    Raises TooSmallError, VertexOutOfRangeError, SelfLoopError,
    DuplicateEdgeError, or DisconnectedError on bad input.
    """
    if n < 2:
        raise TooSmallError(f"need at least 2 vertices, got {n}")
    seen: set[Edge] = set()
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} listed twice")
        seen.add(e)
        neighbors[u].append(v)
        neighbors[v].append(u)

    reached = _bfs_reachable(neighbors, 0, n)
    if len(reached) != n:
        missing = min(set(range(n)) - reached)
        raise DisconnectedError(f"vertex {missing} not reachable from vertex 0")

    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(a)) for a in neighbors),
    )


def _bfs_reachable(neighbors: Sequence[Sequence[int]], start: int, n: int,
                   removed: frozenset[int] = frozenset()) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in neighbors[v]:
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return seen


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-count distance matrix, one BFS per source; read-only n-by-n array."""
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for source in range(g.n):
        row = dist[source]
        row[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            d = row[v] + 1
            for w in g.adjacency[v]:
                if row[w] < 0:
                    row[w] = d
                    queue.append(w)
    dist.setflags(write=False)
    return dist


def element_distance(dist: np.ndarray, element: Element, source: int) -> int:
    """Distance from a vertex or edge to a source vertex.

    For an edge the distance is the smaller of its two endpoint distances.
    """
    n = dist.shape[0]
    if not 0 <= source < n:
        raise UnknownElementError(f"source vertex {source} outside [0, {n})")
    if isinstance(element, (int, np.integer)):
        if not 0 <= element < n:
            raise UnknownElementError(f"vertex {element} outside [0, {n})")
        return int(dist[element, source])
    try:
        u, v = element
    except (TypeError, ValueError):
        raise UnknownElementError(f"not a vertex or edge: {element!r}") from None
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise UnknownElementError(f"not an edge of this graph: {element!r}")
    return int(min(dist[u, source], dist[v, source]))


def graph_stats(g: Graph) -> GraphStats:
    """Leaf set, leaf count, cyclomatic number, and connectivity probes."""
    leaves = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    return GraphStats(
        leaf_set=leaves,
        l1=len(leaves),
        cyclomatic=g.m - g.n + 1,
        min_degree=min(g.degree(v) for v in range(g.n)),
        is_3_connected=_is_3_connected(g),
    )


def _is_3_connected(g: Graph) -> bool:
    # Exhaustive pair removal is fine at desk scale.  Vertex connectivity is
    # capped by the minimum degree, which rules out all cacti immediately.
    if g.n < 4 or min(g.degree(v) for v in range(g.n)) < 3:
        return False
    for u, v in combinations(range(g.n), 2):
        removed = frozenset((u, v))
        start = next(x for x in range(g.n) if x not in removed)
        if len(_bfs_reachable(g.adjacency, start, g.n, removed)) != g.n - 2:
            return False
    return True
