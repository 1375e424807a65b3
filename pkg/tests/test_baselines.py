import pytest

from conftest import path_graph
from romdom.baselines import greedy_rdf, tree_dp_optimum, tree_dp_table
from romdom.errors import IsolatedVertexError, NotATreeError
from romdom.graph import Graph, gen_ba_tree, gen_er, gen_random_tree
from romdom.rng import SplitMix64, derive_seed
from romdom.verify import brute_force_optimum, is_rdf, weight


class TestGreedy:
    def test_examples(self, p3, h2, p7):
        assert greedy_rdf(p3) == (0, 2, 0)
        assert greedy_rdf(h2) == (2, 0, 0, 0, 0)
        assert greedy_rdf(p7) == (0, 2, 0, 0, 2, 0, 1)

    def test_output_is_rdf_and_never_beats_oracle(self):
        rng = SplitMix64(1001)
        for _ in range(30):
            g = gen_er(10, 0.3, rng.next_u64())
            profile = greedy_rdf(g)
            assert is_rdf(g, profile)
            assert weight(profile) >= brute_force_optimum(g).optimum_weight

    def test_isolated_vertex_rejected(self):
        g = Graph.from_edges(3, [(0, 1)])
        with pytest.raises(IsolatedVertexError):
            greedy_rdf(g)


class TestTreeDp:
    def test_fixture_optima(self, p3, p7, star3):
        assert tree_dp_optimum(p3).optimum_weight == 2
        assert tree_dp_optimum(p7).optimum_weight == 5
        assert tree_dp_optimum(star3).optimum_weight == 2

    def test_leaf_base_case(self, p3):
        # rooted at 0, vertices 0-1-2: vertex 2 is a leaf
        table = tree_dp_table(p3)
        leaf = table[2]
        assert (leaf.a, leaf.b, leaf.d) == (2, 1, 0)
        assert leaf.c > 10**9  # unreachable without children

    def test_black_state_costs_at_least_two(self):
        for seed in range(5):
            g = gen_random_tree(9, derive_seed(21, seed))
            assert all(entry.a >= 2 for entry in tree_dp_table(g))

    def test_path_closed_form(self):
        for n in (2, 5, 9, 30, 100, 151):
            assert tree_dp_optimum(path_graph(n)).optimum_weight == -(-2 * n // 3)

    def test_witness_is_valid(self):
        for seed in range(10):
            g = gen_random_tree(25, derive_seed(22, seed))
            result = tree_dp_optimum(g)
            assert is_rdf(g, result.witness)
            assert weight(result.witness) == result.optimum_weight

    def test_matches_brute_force_battery(self):
        # the full 200-tree battery runs in the acceptance suite
        rng = SplitMix64(2002)
        for _ in range(40):
            n = 2 + rng.randrange(11)
            gen = gen_random_tree if rng.randrange(2) else gen_ba_tree
            g = gen(n, rng.next_u64())
            assert tree_dp_optimum(g).optimum_weight == (
                brute_force_optimum(g).optimum_weight
            )

    def test_non_tree_rejected(self, c4):
        with pytest.raises(NotATreeError):
            tree_dp_optimum(c4)
        with pytest.raises(NotATreeError):
            tree_dp_table(Graph.from_edges(1, []))

    def test_root_choice_does_not_change_weight(self):
        g = gen_random_tree(12, 33)
        weights = {tree_dp_optimum(g, root=r).optimum_weight for r in range(12)}
        assert len(weights) == 1
