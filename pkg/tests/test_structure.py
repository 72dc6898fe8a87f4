"""Cactus recognition, rings, hanging components, and geodesic triples."""

from collections import deque
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from mixedmetric import (
    CactusSpec,
    GraphClassTag,
    InfeasibleError,
    NotACactusError,
    active_marks,
    all_pairs_distances,
    augment_for_triple,
    biconnected_blocks,
    build_graph,
    canonical_edge,
    classify,
    extract_cycles,
    has_geodesic_triple,
    random_cactus,
    random_connected_graph,
    tv_partition,
)

from graphs import bowtie, complete, cycle, path, tadpole


# --- independent test oracles -------------------------------------------

def ring_distance(length, i, j):
    return min(abs(i - j), length - abs(i - j))


def triple_by_distance_sum(length, marked):
    """Literal definition: pairwise ring distances of some triple sum to L."""
    return any(
        ring_distance(length, a, b) + ring_distance(length, b, c)
        + ring_distance(length, c, a) == length
        for a, b, c in combinations(sorted(marked), 3)
    )


def minimal_augment_brute(length, marked, forbidden=()):
    """Reference enumeration: smallest lexicographic addition, sizes 1..3."""
    base = set(marked)
    allowed = [p for p in range(length) if p not in forbidden and p not in base]
    for size in (1, 2, 3):
        for extra in combinations(allowed, size):
            if triple_by_distance_sum(length, base | set(extra)):
                return set(extra)
    return None


def components_without_ring_edges(g, ring):
    """Connected components of the graph after deleting the ring's edges."""
    skip = {canonical_edge(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))}
    comp = [-1] * g.n
    label = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        comp[start] = label
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if comp[w] < 0 and canonical_edge(v, w) not in skip:
                    comp[w] = label
                    queue.append(w)
        label += 1
    return comp


random_cacti = st.builds(
    lambda cycles, lo, spread, pendants, seed: random_cactus(
        CactusSpec(cycles, (lo, lo + spread),
                   pendants if cycles else pendants + 1, seed)),
    st.integers(0, 3), st.integers(3, 6), st.integers(0, 2),
    st.integers(0, 4), st.integers(0, 10**6),
)


class TestClassify:
    def test_path_is_tree(self):
        info = classify(path(6))
        assert info.tag is GraphClassTag.TREE and info.cycle_count == 0

    def test_bowtie_is_cactus(self):
        info = classify(bowtie())
        assert info.tag is GraphClassTag.CACTUS and info.cycle_count == 2

    def test_complete_graph_is_general(self):
        assert classify(complete(4)).tag is GraphClassTag.GENERAL

    def test_pure_ring_is_cycle(self):
        info = classify(cycle(5))
        assert info.tag is GraphClassTag.CYCLE and info.cycle_count == 1

    def test_tadpole_is_unicyclic(self):
        assert classify(tadpole()).tag is GraphClassTag.UNICYCLIC

    def test_diamond_is_general(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert classify(g).tag is GraphClassTag.GENERAL

    def test_tags_report_most_specific_class(self):
        # One triangle plus a bridge is unicyclic, not merely cactus.
        g = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        assert classify(g).tag is GraphClassTag.UNICYCLIC


@given(st.integers(2, 10), st.integers(0, 14), st.integers(0, 10**6))
@settings(max_examples=60)
def test_blocks_match_networkx(n, extra, seed):
    g = random_connected_graph(n, min(n - 1 + extra, n * (n - 1) // 2), seed)
    h = nx.Graph(list(g.edges))
    expected = {frozenset(canonical_edge(u, v) for u, v in comp)
                for comp in nx.biconnected_component_edges(h)}
    assert set(biconnected_blocks(g)) == expected


class TestExtractCycles:
    def test_pure_ring(self):
        (c,) = extract_cycles(cycle(5))
        assert c.ring == (0, 1, 2, 3, 4) and c.length == 5 and c.rt == 0

    def test_bowtie_rings_and_roots(self):
        a, b = extract_cycles(bowtie())
        assert a.ring == (0, 1, 2) and b.ring == (0, 3, 4)
        assert a.rt == b.rt == 1
        assert a.root_positions == b.root_positions == {0}

    def test_tadpole(self):
        (c,) = extract_cycles(tadpole())
        assert c.length == 4 and c.rt == 1 and c.root_positions == {0}

    def test_ring_orientation_deterministic(self):
        # Scrambled labels: the ring starts at the least vertex and turns
        # toward its smaller ring neighbor.
        g = build_graph(4, [(3, 1), (1, 2), (2, 0), (0, 3)])
        (c,) = extract_cycles(g)
        assert c.ring == (0, 2, 1, 3)

    def test_general_graph_rejected(self):
        with pytest.raises(NotACactusError):
            extract_cycles(complete(4))

    def test_tree_has_no_cycles(self):
        assert extract_cycles(path(4)) == ()

    def test_consecutive_ring_entries_adjacent(self):
        g = random_cactus(CactusSpec(3, (3, 7), 4, seed=99))
        for c in extract_cycles(g):
            for i in range(c.length):
                assert g.has_edge(c.ring[i], c.ring[(i + 1) % c.length])


class TestTvPartition:
    def test_tadpole_tail_anchors_to_attachment(self):
        g = tadpole()
        (c,) = extract_cycles(g)
        part = tv_partition(g, c)
        assert part.anchor[4] == part.anchor[5] == c.ring.index(0)

    def test_pure_ring_is_identity(self):
        g = cycle(5)
        (c,) = extract_cycles(g)
        assert tv_partition(g, c).anchor == (0, 1, 2, 3, 4)

    def test_bowtie_other_triangle_anchors_to_shared_vertex(self):
        g = bowtie()
        a, _ = extract_cycles(g)  # a is the triangle (0, 1, 2)
        part = tv_partition(g, a)
        shared = a.ring.index(0)
        assert part.anchor[3] == part.anchor[4] == shared

    @given(random_cacti)
    @settings(max_examples=40, deadline=None)
    def test_preimages_are_the_deleted_edge_components(self, g):
        for c in extract_cycles(g):
            part = tv_partition(g, c)
            comp = components_without_ring_edges(g, c.ring)
            for v in range(g.n):
                # Same anchor exactly when same component as that ring vertex.
                assert comp[v] == comp[c.ring[part.anchor[v]]]

    @given(random_cacti)
    @settings(max_examples=40, deadline=None)
    def test_root_positions_have_nontrivial_components(self, g):
        # Degree >= 3 on the ring must coincide with a nontrivial hanging part.
        for c in extract_cycles(g):
            part = tv_partition(g, c)
            sizes = [0] * c.length
            for v in range(g.n):
                sizes[part.anchor[v]] += 1
            for pos in range(c.length):
                assert (pos in c.root_positions) == (sizes[pos] >= 2)


class TestActiveMarks:
    def test_ring_vertex_marks_itself(self):
        g = cycle(5)
        (c,) = extract_cycles(g)
        marks = active_marks(c, tv_partition(g, c), {2})
        assert marks.positions == {2} and marks.count == 1

    def test_pendant_leaf_marks_attachment(self):
        g = tadpole()
        (c,) = extract_cycles(g)
        marks = active_marks(c, tv_partition(g, c), {5})
        assert marks.positions == {c.ring.index(0)}

    def test_far_triangle_marks_shared_vertex(self):
        g = bowtie()
        a, _ = extract_cycles(g)
        marks = active_marks(a, tv_partition(g, a), {3, 4})
        assert marks.positions == {a.ring.index(0)} and marks.count == 1


class TestGeodesicTriple:
    def test_even_spread_is_a_triple(self):
        assert has_geodesic_triple(6, {0, 2, 4})

    def test_clustered_marks_are_not(self):
        assert not has_geodesic_triple(6, {0, 1, 2})
        assert not triple_by_distance_sum(6, {0, 1, 2})

    def test_triple_among_four_marks(self):
        assert has_geodesic_triple(8, {0, 1, 2, 4})
        assert triple_by_distance_sum(8, {0, 1, 2, 4})

    def test_fewer_than_three_marks(self):
        assert not has_geodesic_triple(9, set())
        assert not has_geodesic_triple(9, {1, 5})

    def test_out_of_range_marks_rejected(self):
        with pytest.raises(ValueError):
            has_geodesic_triple(5, {0, 5, 2})

    @given(st.integers(3, 24), st.lists(st.integers(0, 23), max_size=12))
    @settings(max_examples=300)
    def test_matches_distance_sum_definition(self, length, raw):
        marked = {p % length for p in raw}
        assert has_geodesic_triple(length, marked) == triple_by_distance_sum(length, marked)

    @given(st.integers(3, 20), st.lists(st.integers(0, 19), max_size=8),
           st.integers(0, 19))
    @settings(max_examples=200)
    def test_monotone_under_new_marks(self, length, raw, extra):
        marked = {p % length for p in raw}
        if has_geodesic_triple(length, marked):
            assert has_geodesic_triple(length, marked | {extra % length})


class TestAugmentForTriple:
    def test_from_scratch_lexicographic(self):
        # Brute enumeration gives {0, 1, 3}: arcs 1, 2, 3 on a 6-ring.
        assert minimal_augment_brute(6, set()) == {0, 1, 3}
        assert augment_for_triple(6, set()) == {0, 1, 3}

    def test_single_completion_scan(self):
        assert minimal_augment_brute(8, {0, 1}) == {4}
        assert augment_for_triple(8, {0, 1}) == {4}

    def test_antipodal_pair_on_square(self):
        assert minimal_augment_brute(4, {0, 2}) == {1}
        assert augment_for_triple(4, {0, 2}) == {1}

    def test_already_satisfied_needs_nothing(self):
        assert augment_for_triple(6, {0, 2, 4}) == frozenset()

    def test_forbidden_positions_avoided(self):
        added = augment_for_triple(8, {0, 1}, forbidden={4})
        assert added == {5}

    def test_infeasible_when_blocked(self):
        with pytest.raises(InfeasibleError):
            augment_for_triple(3, set(), forbidden={0})

    @given(st.integers(3, 14), st.lists(st.integers(0, 13), max_size=5),
           st.sets(st.integers(0, 13), max_size=4))
    @settings(max_examples=200)
    def test_matches_brute_enumeration(self, length, raw, forbidden_raw):
        marked = {p % length for p in raw}
        forbidden = {p % length for p in forbidden_raw}
        if triple_by_distance_sum(length, marked):
            return
        expected = minimal_augment_brute(length, marked, forbidden)
        if expected is None:
            with pytest.raises(InfeasibleError):
                augment_for_triple(length, marked, forbidden)
        else:
            added = augment_for_triple(length, marked, forbidden)
            assert set(added) == expected
            assert has_geodesic_triple(length, marked | added)
            assert not added & forbidden


@given(random_cacti)
@settings(max_examples=40, deadline=None)
def test_blocks_partition_edges(g):
    blocks = biconnected_blocks(g)
    counted = sorted(e for b in blocks for e in b)
    assert counted == sorted(g.edges)


@given(random_cacti)
@settings(max_examples=40, deadline=None)
def test_ring_arc_distance_equals_graph_distance(g):
    dist = all_pairs_distances(g)
    for c in extract_cycles(g):
        for i, j in combinations(range(c.length), 2):
            assert dist[c.ring[i], c.ring[j]] == ring_distance(c.length, i, j)


@given(st.integers(2, 4), st.integers(0, 3), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_multi_cycle_cacti_have_roots_everywhere(cycles, pendants, seed):
    g = random_cactus(CactusSpec(cycles, (3, 6), pendants, seed))
    for c in extract_cycles(g):
        assert c.rt >= 1
