import pytest

from harmolight.dynamics import brute_digraph
from harmolight.gf2 import BitMatrix
from harmolight.graphs import Graph, harmonic_matrix
from harmolight.monoid import monoid_profile
from harmolight.trees import (
    InconsistentFiltration,
    TreeFactorization,
    filtration_from_tree,
    kernel_filtration,
    tree_factorization,
    tree_node_count,
    tree_product,
)
from oracles import all_labeled_graphs, count_annihilated

T = TreeFactorization.from_mapping


def _structure(g):
    a = harmonic_matrix(g)
    p = monoid_profile(a)
    filt = kernel_filtration(a, p.tail_k)
    return a, p, filt, tree_factorization(filt)


class TestFiltration:
    def test_zero_matrix(self):
        assert kernel_filtration(BitMatrix.zeros(3), 1) == [3]

    def test_k2(self):
        a = harmonic_matrix(Graph.complete(2))
        assert kernel_filtration(a, monoid_profile(a).tail_k) == [1, 2]

    def test_p3(self):
        a = harmonic_matrix(Graph.path(3))
        assert kernel_filtration(a, monoid_profile(a).tail_k) == [1]

    def test_monotone_and_concave(self):
        for n in range(1, 7):
            for _, edges in all_labeled_graphs(n):
                _, _, filt, _ = _structure(Graph(n, frozenset(edges)))
                K = [0, *filt]
                diffs = [K[i + 1] - K[i] for i in range(len(K) - 1)]
                assert all(d > 0 for d in diffs)
                assert all(diffs[i + 1] <= diffs[i] for i in range(len(diffs) - 1))


class TestFactorization:
    def test_empty_graph(self):
        assert tree_factorization([3]) == T({1: 3})

    def test_k2(self):
        assert tree_factorization([1, 2]) == T({2: 1})

    def test_p3(self):
        assert tree_factorization([1]) == T({1: 1})

    def test_invertible_gives_trivial_tree(self):
        assert tree_factorization([]) == TreeFactorization()

    def test_negative_multiplicity(self):
        with pytest.raises(InconsistentFiltration):
            tree_factorization([1, 3])

    def test_render_and_parse(self):
        t = T({1: 3, 2: 1})
        assert t.render() == "I1^3 * I2"
        assert TreeFactorization.parse("I1^3 * I2") == t
        assert TreeFactorization().render() == "I0"
        assert TreeFactorization.parse("I0") == TreeFactorization()

    def test_inverse_system_roundtrip_exhaustive(self):
        for n in range(1, 7):
            for _, edges in all_labeled_graphs(n):
                a, p, filt, tree = _structure(Graph(n, frozenset(edges)))
                assert filtration_from_tree(tree, p.tail_k) == filt
                assert tree.n_factors == filt[0]
                assert tree.dimension == p.dim_T

    def test_annihilated_state_counts_exhaustive(self):
        for n in range(1, 6):
            for _, edges in all_labeled_graphs(n):
                _, _, filt, _ = _structure(Graph(n, frozenset(edges)))
                for j, K in enumerate(filt, start=1):
                    assert count_annihilated(n, edges, j) == 2**K


class TestTreeMonoid:
    def test_unit(self):
        t = T({1: 2, 3: 1})
        assert tree_product(t, TreeFactorization()) == t

    def test_free(self):
        assert tree_product(T({1: 1}), T({1: 1})) == T({1: 2})

    def test_union_of_k2(self):
        assert tree_product(T({2: 1}), T({2: 1})) == T({2: 2})

    def test_commutative_associative(self):
        a, b, c = T({1: 1}), T({2: 3}), T({1: 1, 4: 1})
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


class TestNodeCount:
    def test_examples(self):
        assert tree_node_count(TreeFactorization()) == 1
        assert tree_node_count(T({2: 1})) == 4
        assert tree_node_count(T({1: 3})) == 8

    def test_single_block_is_binomial(self):
        # path P4 has dim Ker a = 1, so T(G) is a single binomial tree
        a, p, filt, tree = _structure(Graph.path(4))
        d = brute_digraph(a)
        zero_tree = int((d.roots == 0).sum())
        assert zero_tree == tree_node_count(tree)
        if tree.n_factors == 1:
            depths = d.tail_depths[d.roots == 0]
            assert int(depths.max()) == tree.height


class TestInDegreeLaw:
    def test_exhaustive(self):
        for n in range(1, 6):
            for _, edges in all_labeled_graphs(n):
                g = Graph(n, frozenset(edges))
                _, _, filt, _ = _structure(g)
                indeg = brute_digraph(g).in_degrees()
                assert set(indeg.tolist()) <= {0, 2 ** filt[0]}
