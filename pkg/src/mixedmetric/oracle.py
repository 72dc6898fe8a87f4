"""Definition-level ground truth for mixed metric generators.

A vertex set S is a mixed metric generator when every pair of distinct
elements of V(G) union E(G) is told apart by the distance to some member
of S.  Verification compares the full profile table; the exact dimension
is found by exhaustive search over supersets of the forced leaf set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import EmptySetError, TooLargeError, VertexOutOfRangeError
from .graph import Element, Graph, all_pairs_distances, graph_stats


class FailingPair(NamedTuple):
    """Two distinct elements with identical distance profiles."""

    x: Element
    y: Element


class Profile(NamedTuple):
    """Distances from one element to every generator vertex, in set order."""

    element: Element
    distances: tuple[int, ...]


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: tuple[int, ...]


def element_order(g: Graph) -> tuple[Element, ...]:
    """Vertices in id order, then canonical edges in sorted order."""
    return tuple(range(g.n)) + g.edges


def _element_rows(g: Graph) -> list[tuple[int, ...]]:
    # Row per element: its distance to every vertex of the graph.
    dist = all_pairs_distances(g)
    rows = [tuple(int(d) for d in dist[v]) for v in range(g.n)]
    for u, v in g.edges:
        rows.append(tuple(int(d) for d in np.minimum(dist[u], dist[v])))
    return rows


def element_profiles(g: Graph, members: Iterable[int]) -> tuple[Profile, ...]:
    """Profile of every vertex and edge against the given generator set."""
    order = _checked_members(g, members)
    rows = _element_rows(g)
    return tuple(
        Profile(elem, tuple(row[s] for s in order))
        for elem, row in zip(element_order(g), rows)
    )


def _checked_members(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    order = tuple(sorted(set(members)))
    if not order:
        raise EmptySetError("generator set must be nonempty")
    if order[0] < 0 or order[-1] >= g.n:
        raise VertexOutOfRangeError(f"generator vertices must lie in [0, {g.n})")
    return order


def is_mixed_generator(g: Graph, members: Iterable[int]) -> tuple[bool, FailingPair | None]:
    """Decide whether the set distinguishes all vertex/edge elements.

    On failure also returns the first failing pair, ordering elements as
    vertices before edges and lexicographically within each kind.
    """
    order = _checked_members(g, members)
    rows = _element_rows(g)
    elements = element_order(g)
    by_profile: dict[tuple[int, ...], list[int]] = {}
    for idx, row in enumerate(rows):
        by_profile.setdefault(tuple(row[s] for s in order), []).append(idx)
    clashes = [group for group in by_profile.values() if len(group) > 1]
    if not clashes:
        return True, None
    first = min((g[0], g[1]) for g in clashes)
    return False, FailingPair(elements[first[0]], elements[first[1]])


def forced_vertices(g: Graph) -> frozenset[int]:
    """Vertices every mixed metric generator must contain: the leaves.

    A missing leaf leaves its neighbor and its pendant edge at equal
    distance from everything else, so no generator can omit a leaf.
    """
    return graph_stats(g).leaf_set


def brute_force_mdim(g: Graph, max_n: int = 16) -> SearchResult:
    """Exact mixed metric dimension by subset enumeration.

    Searches supersets of the forced leaf set in increasing cardinality,
    drawing candidates from non-leaf vertices; the witness is the
    lexicographically first optimum.  Raises TooLargeError for n > max_n.
    """
    if g.n > max_n:
        raise TooLargeError(f"n = {g.n} exceeds the search cap {max_n}")
    rows = _element_rows(g)
    forced = tuple(sorted(forced_vertices(g)))
    candidates = [v for v in range(g.n) if v not in set(forced)]
    for k in range(max(len(forced), 1), g.n + 1):
        for extra in combinations(candidates, k - len(forced)):
            chosen = tuple(sorted(forced + extra))
            if _profiles_distinct(rows, chosen):
                return SearchResult(value=k, witness=chosen)
    raise AssertionError("unreachable: the full vertex set is always a generator")


def _profiles_distinct(rows: Sequence[tuple[int, ...]], members: tuple[int, ...]) -> bool:
    seen = set()
    for row in rows:
        key = tuple(row[s] for s in members)
        if key in seen:
            return False
        seen.add(key)
    return True
