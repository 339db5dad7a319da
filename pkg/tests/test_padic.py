import pytest

from umtree import (
    Dendrogram,
    PadicCode,
    check_spherical_completeness,
    check_uniqueness,
    cluster_chain,
    decimal_value,
    dilate,
    encode,
    euclidean_matrix,
    nn_chain_cluster,
)
from umtree.datasets import ranked_demo_tree

from conftest import random_dendrogram, random_points


def two_leaf():
    return Dendrogram(2, ((0, 1, 1.0),))


class TestEncode:
    def test_demo_tree_codes(self):
        t = ranked_demo_tree()
        assert encode(t, 3, 0).as_dict() == {1: +1, 2: +1, 5: +1, 7: +1}
        assert encode(t, 3, 7).as_dict() == {6: -1, 7: -1}
        assert encode(t, 3, 2).as_dict() == {2: -1, 5: +1, 7: +1}
        assert encode(t, 3, 5).as_dict() == {4: -1, 5: -1, 7: +1}

    def test_two_leaf(self):
        t = two_leaf()
        assert encode(t, 2, 0).as_dict() == {1: +1}
        assert encode(t, 2, 1).as_dict() == {1: -1}

    def test_nonzero_exactly_on_root_path(self, rng):
        t = random_dendrogram(rng, 9, rank_levels=True)
        for term in range(9):
            path_ranks = {t.rank(node) for node in t.path_to_root(term)}
            assert set(encode(t, 3, term).coeffs) == path_ranks
            assert max(path_ranks) == 8  # root rank n-1

    def test_code_validation(self):
        with pytest.raises(ValueError):
            PadicCode(4, {1: 1})  # not prime
        with pytest.raises(ValueError):
            PadicCode(3, {1: 2})
        with pytest.raises(ValueError):
            PadicCode(3, {0: 1})


class TestDecimal:
    def test_single_term(self):
        assert decimal_value(PadicCode(2, {1: 1})) == 2

    def test_demo_first_terminal(self):
        code = encode(ranked_demo_tree(), 2, 0)
        assert decimal_value(code) == 2 + 4 + 32 + 128

    def test_ambiguity_witness(self):
        assert decimal_value(PadicCode(2, {1: +1})) == decimal_value(
            PadicCode(2, {1: -1, 2: +1})
        )

    def test_exact_big_values(self):
        code = PadicCode(3, {j: 1 for j in range(1, 64)})
        assert decimal_value(code) == (3**64 - 3) // 2


class TestUniqueness:
    def test_demo_tree_p3(self):
        assert check_uniqueness(ranked_demo_tree(), 3)

    def test_two_leaf_p2(self):
        assert check_uniqueness(two_leaf(), 2)

    def test_injective_for_p3_on_random_trees(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 13))
            t = random_dendrogram(rng, n, rank_levels=True)
            assert check_uniqueness(t, 3)


class TestDilate:
    def test_worked_example(self):
        code = encode(ranked_demo_tree(), 2, 0)
        assert dilate(code).as_dict() == {1: +1, 4: +1, 6: +1}

    def test_bottom_level_lost(self):
        assert dilate(PadicCode(2, {1: 1})).as_dict() == {}

    def test_exhausts_after_n_minus_1(self, rng):
        t = random_dendrogram(rng, 8, rank_levels=True)
        for term in range(8):
            code = encode(t, 3, term)
            for _ in range(7):
                code = dilate(code)
            assert code.as_dict() == {}

    def test_rises_one_level(self, rng):
        t = random_dendrogram(rng, 10, rank_levels=True)
        for term in range(10):
            code = encode(t, 3, term)
            shifted = {j - 1 for j in code.coeffs if j > 1}
            assert set(dilate(code).coeffs) == shifted


class TestChains:
    def test_demo_tree_chain(self):
        chain = cluster_chain(ranked_demo_tree(), 0)
        assert chain == [
            frozenset({0}),
            frozenset({0, 1}),
            frozenset({0, 1, 2}),
            frozenset(range(6)),
            frozenset(range(8)),
        ]

    def test_two_leaf_chain(self):
        assert cluster_chain(two_leaf(), 1) == [
            frozenset({1}),
            frozenset({0, 1}),
        ]

    def test_strictly_increasing_to_root(self, rng):
        t = random_dendrogram(rng, 14)
        union = set()
        for term in range(14):
            chain = cluster_chain(t, term)
            assert chain[-1] == frozenset(range(14))
            for lo, hi in zip(chain, chain[1:]):
                assert lo < hi
            union |= chain[0]
        assert union == set(range(14))


class TestSphericalCompleteness:
    def test_demo_tree(self):
        assert check_spherical_completeness(ranked_demo_tree())

    def test_two_leaf(self):
        assert check_spherical_completeness(two_leaf())

    def test_clustered_random_data(self, rng):
        m = euclidean_matrix(random_points(rng, 20, 3))
        assert check_spherical_completeness(nn_chain_cluster(m, "ward"))


class TestDilationClusterMap:
    def test_merge_or_stay(self, rng):
        from umtree.padic import dilation_cluster_map

        t = random_dendrogram(rng, 9, rank_levels=True)
        levels = dilation_cluster_map(t)
        for before, after in zip(levels, levels[1:]):
            for cluster in after:
                parts = [c for c in before if c <= cluster]
                assert frozenset().union(*parts) == cluster
                assert len(parts) in (1, 2)
