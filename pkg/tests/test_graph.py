"""Tests for graph.py module."""

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powerdom.constants import Family
from powerdom.errors import InputError
from powerdom.families import FamilySpec, gen_E, gen_L, gen_random_cubic, gen_standard
from powerdom.graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    degree,
    distance,
    greedy_packing,
    is_claw_free,
    is_connected,
    is_packing,
    is_regular,
    line_graph,
)

from .strategies import graph_and_sets, graphs, to_nx


def path(n: int) -> Graph:
    return gen_standard(FamilySpec(Family.PATH, n=n))


def cycle(n: int) -> Graph:
    return gen_standard(FamilySpec(Family.CYCLE, n=n))


def star(leaves: int) -> Graph:
    return gen_standard(FamilySpec(Family.STAR, n=leaves))


def complete(n: int) -> Graph:
    return gen_standard(FamilySpec(Family.COMPLETE, n=n))


def has_induced_claw(g: Graph) -> bool:
    for center in range(g.vertex_count):
        for x, y, z in combinations(g.adjacency[center], 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return True
    return False


@pytest.mark.unit
class TestVertexSet:
    """Test cases for the VertexSet bitset."""

    def test_from_ids_and_iteration(self):
        """Test building a set from ids and reading it back."""
        s = VertexSet.from_ids([4, 0, 2], 5)
        assert list(s) == [0, 2, 4]
        assert len(s) == 3
        assert 2 in s and 1 not in s
        assert s.one_based() == (1, 3, 5)

    def test_from_ids_out_of_range_raises(self):
        """Test that an id outside the universe is rejected."""
        with pytest.raises(InputError, match="out of range"):
            VertexSet.from_ids([5], 5)

    def test_mask_wider_than_universe_raises(self):
        """Test that a mask with bits past the universe is rejected."""
        with pytest.raises(InputError):
            VertexSet(0b1000, 3)

    def test_from_flags(self):
        """Test building a set from 0/1 flags."""
        assert VertexSet.from_flags([1, 0, 0, 1]) == VertexSet.from_ids([0, 3], 4)
        assert VertexSet.from_flags([]) == VertexSet.empty(0)

    def test_set_operations(self):
        """Test union, intersection, difference and subset."""
        a = VertexSet.from_ids([0, 1], 4)
        b = VertexSet.from_ids([1, 2], 4)
        assert (a | b).ids() == (0, 1, 2)
        assert (a & b).ids() == (1,)
        assert (a - b).ids() == (0,)
        assert (a & b).issubset(a)
        assert not a.issubset(b)

    def test_mixing_universes_raises(self):
        """Test that sets over different universes cannot be combined."""
        with pytest.raises(InputError):
            VertexSet.empty(3) | VertexSet.empty(4)


@pytest.mark.unit
class TestGraphConstruction:
    """Test cases for Graph.from_edges and the canonical form."""

    def test_adjacency_is_sorted_and_symmetric(self):
        """Test the canonical adjacency form."""
        g = Graph.from_edges(4, [(3, 0), (1, 0), (2, 0)])
        assert g.adjacency[0] == (1, 2, 3)
        for v in range(4):
            for u in g.adjacency[v]:
                assert v in g.adjacency[u]

    def test_equal_regardless_of_edge_order(self):
        """Test that edge order affects neither equality nor hash."""
        assert Graph.from_edges(3, [(0, 1), (1, 2)]) == Graph.from_edges(3, [(2, 1), (1, 0)])
        assert hash(Graph.from_edges(3, [(0, 1), (1, 2)])) == hash(Graph.from_edges(3, [(2, 1), (1, 0)]))

    def test_self_loop_raises(self):
        """Test that self-loops are rejected."""
        with pytest.raises(InputError, match="self-loop"):
            Graph.from_edges(2, [(1, 1)])

    def test_duplicate_edge_raises(self):
        """Test that a repeated edge is rejected."""
        with pytest.raises(InputError, match="duplicate"):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_out_of_range_raises(self):
        """Test that an endpoint outside the graph is rejected."""
        with pytest.raises(InputError, match="out of range"):
            Graph.from_edges(2, [(0, 2)])

    def test_edges_in_lexicographic_order(self):
        """Test the sorted edge list, edge count and degree sequence."""
        g = Graph.from_edges(4, [(2, 3), (0, 3), (0, 1)])
        assert g.edges() == [(0, 1), (0, 3), (2, 3)]
        assert g.edge_count == 3
        assert g.degree_sequence() == [2, 1, 1, 2]


@pytest.mark.unit
class TestDegreeAndRegularity:
    """Test cases for degree and is_regular."""

    def test_cycle_degree(self):
        """Test that every cycle vertex has degree 2."""
        g = cycle(5)
        assert all(degree(g, v) == 2 for v in range(5))

    def test_star_center_degree(self):
        """Test the degree of a star center."""
        assert degree(star(3), 0) == 3

    def test_e0_is_4_regular(self):
        """Test that every vertex of E_0 has degree 4."""
        g = gen_E(4, 0)
        assert all(degree(g, v) == 4 for v in range(g.vertex_count))

    def test_degree_out_of_range_raises(self):
        """Test that degree rejects an unknown vertex."""
        with pytest.raises(InputError):
            degree(cycle(5), 5)

    def test_is_regular(self):
        """Test is_regular on regular and irregular graphs."""
        assert is_regular(cycle(5), 2)
        assert not is_regular(gen_L(2), 4)
        assert is_regular(gen_E(4, 1), 4)

    def test_empty_graph_is_regular_for_every_k(self):
        """Test that the graph with no vertices is k-regular for any k."""
        assert is_regular(Graph.from_edges(0, []), 0)
        assert is_regular(Graph.from_edges(0, []), 7)

    def test_negative_degree_raises(self):
        """Test that a negative degree is rejected."""
        with pytest.raises(InputError):
            is_regular(cycle(5), -1)


@pytest.mark.unit
class TestClawFree:
    """Test cases for is_claw_free."""

    def test_claw_is_not_claw_free(self):
        """Test that K_{1,3} is not claw-free."""
        assert not is_claw_free(star(3))

    def test_e2_is_claw_free(self):
        """Test that E_2 is claw-free."""
        assert is_claw_free(gen_E(4, 2))

    def test_line_graphs_of_cubic_graphs_are_claw_free(self):
        """Test that line graphs of cubic graphs are claw-free."""
        for seed in range(10):
            assert is_claw_free(line_graph(gen_random_cubic(10, seed)))

    @given(graphs(max_n=9))
    @settings(max_examples=200, deadline=None)
    def test_matches_induced_claw_search(self, g):
        """Test is_claw_free against a direct induced-claw search."""
        assert is_claw_free(g) == (not has_induced_claw(g))

    @given(graphs(max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_line_graph_of_max_degree_3_graph_is_claw_free(self, g):
        """Test that line graphs of graphs with maximum degree 3 are claw-free."""
        if max(g.degree_sequence(), default=0) <= 3:
            assert is_claw_free(line_graph(g))


@pytest.mark.unit
class TestPacking:
    """Test cases for is_packing, closed_neighborhood and greedy_packing."""

    def test_cycle_antipodal_pair(self):
        """Test that opposite vertices of C_6 form a packing."""
        assert is_packing(cycle(6), VertexSet.from_ids([0, 3], 6))

    def test_cycle_distance_two_pair(self):
        """Test that vertices at distance 2 do not form a packing."""
        assert not is_packing(cycle(6), VertexSet.from_ids([0, 2], 6))

    def test_singleton(self):
        """Test that a single vertex is a packing."""
        assert is_packing(complete(5), VertexSet.from_ids([3], 5))

    def test_closed_neighborhood(self):
        """Test closed neighborhoods of a set and of the empty set."""
        g = path(5)
        assert closed_neighborhood(g, VertexSet.from_ids([0, 4], 5)).ids() == (0, 1, 3, 4)
        assert len(closed_neighborhood(g, VertexSet.empty(5))) == 0

    @given(graph_and_sets(max_n=10))
    @settings(max_examples=200, deadline=None)
    def test_matches_pairwise_distances(self, data):
        """Test is_packing against pairwise distances from networkx."""
        g, s, _ = data
        lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        expected = all(lengths[u].get(v, 3) >= 3 for u, v in combinations(s.ids(), 2))
        assert is_packing(g, s) == expected

    @given(graphs(max_n=12))
    @settings(max_examples=100, deadline=None)
    def test_greedy_packing_is_maximal(self, g):
        """Test that greedy packings cannot be extended."""
        s = greedy_packing(g)
        assert is_packing(g, s)
        for v in range(g.vertex_count):
            if v not in s:
                assert not is_packing(g, s | VertexSet.from_ids([v], g.vertex_count))

    def test_greedy_packing_follows_order(self):
        """Test that the greedy packing scans vertices in the given order."""
        g = path(5)
        assert greedy_packing(g).ids() == (0, 3)
        assert greedy_packing(g, order=[2, 0, 1, 3, 4]).ids() == (2,)


@pytest.mark.unit
class TestDistanceAndConnectivity:
    """Test cases for distance and is_connected."""

    def test_same_vertex(self):
        """Test that a vertex is at distance 0 from itself."""
        assert distance(cycle(5), 2, 2) == 0

    def test_path_endpoints(self):
        """Test the distance between path endpoints."""
        assert distance(path(4), 0, 3) == 3

    def test_disjoint_triangles_unreachable(self):
        """Test that vertices in different components have no distance."""
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert distance(g, 0, 4) is None
        assert not is_connected(g)

    def test_connectivity_examples(self):
        """Test is_connected on connected, empty and split graphs."""
        assert is_connected(path(5))
        assert is_connected(gen_E(4, 0))
        assert is_connected(Graph.from_edges(0, []))
        two_k4 = Graph.from_edges(8, list(combinations(range(4), 2)) + list(combinations(range(4, 8), 2)))
        assert not is_connected(two_k4)

    @given(graphs(min_n=1, max_n=12))
    @settings(max_examples=150, deadline=None)
    def test_matches_networkx(self, g):
        """Test distances and connectivity against networkx."""
        h = to_nx(g)
        lengths = dict(nx.all_pairs_shortest_path_length(h))
        for u in range(g.vertex_count):
            for v in range(g.vertex_count):
                assert distance(g, u, v) == lengths[u].get(v)
        assert is_connected(g) == nx.is_connected(h)

    @given(graphs(min_n=1, max_n=10), st.data())
    @settings(max_examples=100, deadline=None)
    def test_distance_is_a_metric_on_components(self, g, data):
        """Test symmetry and the triangle inequality."""
        n = g.vertex_count
        u, v, w = (data.draw(st.integers(0, n - 1)) for _ in range(3))
        assert distance(g, u, v) == distance(g, v, u)
        duv, dvw, duw = distance(g, u, v), distance(g, v, w), distance(g, u, w)
        if duv is not None and dvw is not None:
            assert duw is not None and duw <= duv + dvw


@pytest.mark.unit
class TestLineGraph:
    """Test cases for line_graph."""

    def test_line_graph_of_claw_is_triangle(self):
        """Test that L(K_{1,3}) is K_3."""
        assert line_graph(star(3)) == complete(3)

    def test_line_graph_of_p4_is_p3(self):
        """Test that L(P_4) is P_3."""
        assert line_graph(path(4)) == path(3)

    def test_line_graph_of_k4_is_octahedron(self):
        """Test that L(K_4) is the octahedron."""
        octahedron = line_graph(complete(4))
        assert octahedron.vertex_count == 6
        assert is_regular(octahedron, 4)
        # each edge of K_4 misses exactly one other edge: the opposite one
        for i, (a, b) in enumerate(complete(4).edges()):
            (opposite,) = set(range(6)) - set(octahedron.adjacency[i]) - {i}
            c, d = complete(4).edges()[opposite]
            assert not {a, b} & {c, d}

    @given(graphs(max_n=9))
    @settings(max_examples=150, deadline=None)
    def test_matches_networkx(self, g):
        """Test line_graph against networkx."""
        ours = line_graph(g)
        edge_list = g.edges()
        expected = nx.line_graph(to_nx(g))
        assert ours.vertex_count == expected.number_of_nodes()
        mapped = {frozenset((edge_list[i], edge_list[j])) for i, j in ours.edges()}
        assert mapped == {frozenset((tuple(sorted(a)), tuple(sorted(b)))) for a, b in expected.edges()}

    def test_line_graph_of_cubic_graph_is_4_regular(self):
        """Test that the line graph of a cubic graph is 4-regular and claw-free."""
        g = line_graph(gen_random_cubic(8, seed=3))
        assert g.vertex_count == 12
        assert is_regular(g, 4)
        assert is_claw_free(g)
