"""Tests for families.py module."""

from collections import Counter

import pytest

from powerdom.constants import Family
from powerdom.errors import InputError, ResourceError
from powerdom.exact_solver import min_pds
from powerdom.families import (
    FamilySpec,
    build_family,
    e_family_witness,
    gen_E,
    gen_L,
    gen_random_cubic,
    gen_random_tree,
    gen_standard,
)
from powerdom.graph import Graph, is_claw_free, is_connected, is_regular
from powerdom.propagation import is_pds
from powerdom.tree import WeightedTree


@pytest.mark.unit
class TestGenE:
    """Test cases for the E_k family."""

    @pytest.mark.parametrize("r", [4, 6])
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_structure(self, r, k):
        """Test vertex count, regularity, claw-freeness and connectivity of E_k."""
        g = gen_E(r, k)
        assert g.vertex_count == 2 * r + 1 + k * (r + 1)
        assert is_regular(g, r)
        assert is_claw_free(g)
        assert is_connected(g)

    def test_r6_k2_vertex_count(self):
        """Test the vertex count of the 6-regular E_2."""
        assert gen_E(6, 2).vertex_count == 27

    @pytest.mark.parametrize("r, k", [(3, 0), (5, 1), (2, 0), (4, -1)])
    def test_invalid_parameters_raise(self, r, k):
        """Test that odd or too small r and negative k are rejected."""
        with pytest.raises(InputError):
            gen_E(r, k)

    def test_deterministic(self):
        """Test that E_k does not depend on any randomness."""
        assert gen_E(4, 2) == gen_E(4, 2)

    @pytest.mark.parametrize("r", [4, 6])
    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_witness_dominates(self, r, k):
        """Test that the k+2 witness set is a PDS of E_k."""
        witness = e_family_witness(r, k)
        assert len(witness) == k + 2
        assert is_pds(gen_E(r, k), witness)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_power_domination_number(self, k):
        """Test that E_k needs exactly k+2 vertices."""
        assert min_pds(gen_E(4, k)).cardinality == k + 2

    @pytest.mark.slow
    def test_power_domination_number_k3(self):
        """Test that E_3 needs exactly five vertices."""
        assert min_pds(gen_E(4, 3)).cardinality == 5


@pytest.mark.unit
class TestGenL:
    """Test cases for the K_4 chains."""

    def test_l2_counts(self):
        """Test the size of L_2 and that it is claw-free."""
        g = gen_L(2)
        assert g.vertex_count == 8
        assert g.edge_count == 14
        assert is_claw_free(g)

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_degree_multiset(self, k):
        """Test that L_k has four vertices of degree 3 and the rest of degree 4."""
        degrees = Counter(gen_L(k).degree_sequence())
        assert degrees == Counter({3: 4, 4: 4 * k - 4})

    def test_k_below_two_raises(self):
        """Test that L_1 is rejected."""
        with pytest.raises(InputError):
            gen_L(1)


@pytest.mark.unit
class TestGenStandard:
    """Test cases for the standard families."""

    def test_single_vertex_path(self):
        """Test the path on one vertex."""
        g = gen_standard(FamilySpec(Family.PATH, n=1))
        assert g.vertex_count == 1
        assert g.edge_count == 0

    def test_complete_bipartite(self):
        """Test the size of K_{3,3}."""
        g = gen_standard(FamilySpec(Family.COMPLETE_BIPARTITE, n=3, m=3))
        assert g.vertex_count == 6
        assert g.edge_count == 9

    def test_triangle(self):
        """Test that C_3 equals K_3."""
        assert gen_standard(FamilySpec(Family.CYCLE, n=3)) == gen_standard(FamilySpec(Family.COMPLETE, n=3))

    def test_star_has_center_zero(self):
        """Test that vertex 0 is the center of a star."""
        g = gen_standard(FamilySpec(Family.STAR, n=4))
        assert g.vertex_count == 5
        assert g.adjacency[0] == (1, 2, 3, 4)

    def test_short_cycle_raises(self):
        """Test that C_2 is rejected."""
        with pytest.raises(InputError):
            gen_standard(FamilySpec(Family.CYCLE, n=2))

    def test_missing_parameter_raises(self):
        """Test that K_{n,m} without m is rejected."""
        with pytest.raises(InputError, match="needs parameter m"):
            gen_standard(FamilySpec(Family.COMPLETE_BIPARTITE, n=2))

    def test_zero_size_raises(self):
        """Test that an empty complete graph is rejected."""
        with pytest.raises(InputError):
            gen_standard(FamilySpec(Family.COMPLETE, n=0))


@pytest.mark.unit
class TestGenRandomCubic:
    """Test cases for the pairing-model sampler."""

    def test_four_vertices_give_k4(self):
        """Test that every cubic sample on four vertices is K_4."""
        for seed in range(5):
            assert gen_random_cubic(4, seed) == gen_standard(FamilySpec(Family.COMPLETE, n=4))

    @pytest.mark.parametrize("n", [6, 8, 10, 12, 16])
    def test_connected_and_cubic(self, n):
        """Test that samples are connected and 3-regular."""
        for seed in range(10):
            g = gen_random_cubic(n, seed)
            assert g.vertex_count == n
            assert is_regular(g, 3)
            assert is_connected(g)

    def test_deterministic(self):
        """Test that a seed fixes the sample."""
        assert gen_random_cubic(12, seed=42) == gen_random_cubic(12, seed=42)

    def test_seeds_differ(self):
        """Test that different seeds give different graphs."""
        assert len({gen_random_cubic(12, seed) for seed in range(20)}) > 1

    @pytest.mark.parametrize("n", [2, 5, 7])
    def test_invalid_size_raises(self, n):
        """Test that odd or too small sizes are rejected."""
        with pytest.raises(InputError):
            gen_random_cubic(n, 0)

    def test_exhausted_attempts_raise(self):
        """Test that running out of attempts raises ResourceError."""
        with pytest.raises(ResourceError, match="after 0 attempts"):
            gen_random_cubic(8, 0, attempts=0)


@pytest.mark.unit
class TestGenRandomTree:
    """Test cases for random weighted trees."""

    def test_single_vertex(self):
        """Test a one-vertex random tree."""
        t = gen_random_tree(1, (3, 9), seed=1)
        assert t.vertex_count == 1
        assert 3 <= t.weights[0] <= 9

    def test_two_vertices(self):
        """Test a two-vertex random tree."""
        t = gen_random_tree(2, (1, 1), seed=1)
        assert t.edges() == [(0, 1)]
        assert t.labels == (0, 1)

    @pytest.mark.parametrize("n", [3, 7, 14, 50])
    def test_valid_tree(self, n):
        """Test that random trees are connected with n-1 edges and weights in range."""
        t = gen_random_tree(n, (1, 100), seed=n)
        assert t.vertex_count == n
        assert t.labels[t.root] == n - 1
        assert is_connected(t.to_graph())
        assert t.to_graph().edge_count == n - 1
        assert all(1 <= w <= 100 for w in t.weights)

    def test_deterministic(self):
        """Test that a seed fixes the tree."""
        assert gen_random_tree(20, (1, 100), seed=5) == gen_random_tree(20, (1, 100), seed=5)

    @pytest.mark.parametrize("weight_range", [(0, 5), (5, 4), (-1, 3)])
    def test_bad_weight_range_raises(self, weight_range):
        """Test that empty or non-positive weight ranges are rejected."""
        with pytest.raises(InputError):
            gen_random_tree(5, weight_range, seed=0)

    def test_empty_tree_raises(self):
        """Test that a tree of zero vertices is rejected."""
        with pytest.raises(InputError):
            gen_random_tree(0, (1, 2), seed=0)


@pytest.mark.unit
class TestBuildFamily:
    """Test cases for the family dispatcher."""

    def test_dispatches_graph_families(self):
        """Test that graph families go to their generators."""
        assert build_family(FamilySpec(Family.E, r=4, k=1)) == gen_E(4, 1)
        assert build_family(FamilySpec(Family.L, k=3)) == gen_L(3)
        assert build_family(FamilySpec(Family.RANDOM_CUBIC, n=8, seed=3)) == gen_random_cubic(8, 3)
        assert isinstance(build_family(FamilySpec(Family.PATH, n=4)), Graph)

    def test_dispatches_random_tree(self):
        """Test that the random tree family returns a WeightedTree."""
        result = build_family(FamilySpec(Family.RANDOM_TREE, n=6, seed=2, weight_range=(1, 10)))
        assert isinstance(result, WeightedTree)
        assert result == gen_random_tree(6, (1, 10), seed=2)

    def test_missing_parameter_raises(self):
        """Test that a family spec missing a parameter is rejected."""
        with pytest.raises(InputError, match="needs parameter k"):
            build_family(FamilySpec(Family.E, r=4))
