import itertools

import numpy as np
import pytest

from plethysm.characters import homogeneous_plethysm
from plethysm.diagrams import (
    PartitionDiagram,
    generator_names,
    identity_diagram,
    multiply_diagrams,
    p12_diagram,
    p_diagram,
    swap_diagram,
)
from plethysm.errors import MalformedPartitionError, ResourceCapError, SizeMismatchError
from plethysm.setpartitions import FoulkesPair, SetPartition, foulkes_pairs, set_partitions
from plethysm.tensor import (
    block_constant_support,
    block_constant_vector,
    diagram_tensor_matrix,
    digit_to_pair,
    foulkes_image_rank,
    index_digits,
    integer_matrix_rank,
    tensor_action_consistent,
    tensor_basis_orbits,
    value_type,
    value_type_fibers,
    value_type_orbit_vector,
    wreath_embed,
)


def pair(inner_blocks, outer_blocks, r):
    return FoulkesPair(
        SetPartition.from_blocks(inner_blocks, r),
        SetPartition.from_blocks(outer_blocks, r),
    )


class TestDiagramMatrix:
    def test_identity(self):
        for m, n, r in ((2, 1, 2), (2, 2, 1), (3, 1, 1)):
            mat = diagram_tensor_matrix(identity_diagram(r), m, n)
            assert np.array_equal(mat, np.eye((m * n) ** r, dtype=np.int64))

    def test_swap_is_the_factor_exchange(self):
        mat = diagram_tensor_matrix(swap_diagram(2, 1), 2, 1)
        expected = np.zeros((4, 4), dtype=np.int64)
        for a in range(2):
            for b in range(2):
                expected[2 * a + b, 2 * b + a] = 1
        assert np.array_equal(mat, expected)

    def test_p1_rank1_all_ones(self):
        mat = diagram_tensor_matrix(p_diagram(1), 2, 1)
        assert mat.tolist() == [[1, 1], [1, 1]]

    def test_entries_enforce_block_constancy(self):
        mat = diagram_tensor_matrix(p12_diagram(2), 2, 2)
        mn = 4
        for row in range(16):
            for col in range(16):
                i = index_digits(row, mn, 2)
                j = index_digits(col, mn, 2)
                expected = int(i[0] == i[1] == j[0] == j[1])
                assert mat[row, col] == expected

    def test_multiplicative_with_loop_scalar(self):
        m = n = 2
        diagrams = [PartitionDiagram(2, sp) for sp in set_partitions(4, cap=4)]
        mats = {d: diagram_tensor_matrix(d, m, n) for d in diagrams}
        for x, y in itertools.product(diagrams, repeat=2):
            t, z = multiply_diagrams(x, y)
            assert np.array_equal(mats[x] @ mats[y], (m * n) ** t * mats[z])

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            diagram_tensor_matrix(identity_diagram(4), 3, 3)


class TestWreathEmbed:
    def test_identity(self):
        assert wreath_embed([(1, 2), (1, 2)], (1, 2)) == (1, 2, 3, 4)

    def test_outer_swap(self):
        assert wreath_embed([(1, 2), (1, 2)], (2, 1)) == (3, 4, 1, 2)

    def test_inner_only(self):
        assert wreath_embed([(2, 1)], (1,)) == (2, 1)

    def test_malformed(self):
        with pytest.raises(MalformedPartitionError):
            wreath_embed([(1, 1)], (1,))
        with pytest.raises(SizeMismatchError):
            wreath_embed([(1, 2)], (1, 2))

    def test_group_homomorphism_on_samples(self):
        # embedding respects composition for a handful of elements
        import random

        rng = random.Random(5)
        m, n = 3, 2
        for _ in range(25):
            s1 = [tuple(rng.sample(range(1, m + 1), m)) for _ in range(n)]
            p1 = tuple(rng.sample(range(1, n + 1), n))
            s2 = [tuple(rng.sample(range(1, m + 1), m)) for _ in range(n)]
            p2 = tuple(rng.sample(range(1, n + 1), n))
            w1 = wreath_embed(s1, p1)
            w2 = wreath_embed(s2, p2)
            # group law of the wreath product acting on the left
            composed_pi = tuple(p1[p2[j] - 1] for j in range(n))
            composed_sigmas = [
                tuple(s1[j][s2[_pre(p1, j + 1) - 1][i] - 1] for i in range(m))
                for j in range(n)
            ]
            lhs = tuple(w1[w2[c - 1] - 1] for c in range(1, m * n + 1))
            assert lhs == wreath_embed(composed_sigmas, composed_pi)


def _pre(pi, target):
    return pi.index(target) + 1


class TestValueType:
    def test_seven_position_example(self):
        pairs = [(2, 1), (1, 1), (1, 1), (3, 2), (2, 3), (3, 2), (3, 3)]
        vt = value_type(pairs)
        assert str(vt) == "{1|2,3|4,6|5|7} ; {1,2,3|4,6|5,7}"

    def test_constant_vector(self):
        vt = value_type([(1, 1)] * 4)
        assert vt.inner == SetPartition.one_block(4)
        assert vt.outer == SetPartition.one_block(4)

    def test_distinct_superscripts(self):
        vt = value_type([(1, 1), (1, 2), (1, 3)])
        assert vt.inner == SetPartition.singletons(3)
        assert vt.outer == SetPartition.singletons(3)

    def test_fibers_lie_in_truncation(self):
        m, n, r = 2, 2, 3
        mn = m * n
        for flat in range(mn**r):
            digits = index_digits(flat, mn, r)
            vt = value_type([digit_to_pair(c, m) for c in digits])
            assert vt.in_truncation(m, n)


class TestBlockConstantVectors:
    def test_support_counts(self):
        p = pair([[1], [2]], [[1, 2]], 2)
        vec = block_constant_vector(p, 2, 2)
        assert int(vec.sum()) == 8
        assert set(vec.tolist()) <= {0, 1}

    def test_strict_orbit_sum(self):
        p = pair([[1], [2]], [[1, 2]], 2)
        strict = value_type_orbit_vector(p, 2, 2)
        assert int(strict.sum()) == 4

    def test_singleton_pair_gives_everything_at_rank1(self):
        p = pair([[1]], [[1]], 1)
        for m, n in ((2, 2), (3, 2)):
            assert block_constant_vector(p, m, n).sum() == m * n

    def test_known_support_of_unbalanced_example(self):
        # the ambient space is 20**5-dimensional; only the support is built
        p = pair([[1, 2, 4], [3], [5]], [[1, 2, 3, 4], [5]], 5)
        support = block_constant_support(p, 4, 5)
        assert len(support) == len(set(support.tolist())) == 4**3 * 5**2

    def test_equals_sum_over_coarsenings(self):
        for r, m, n in ((2, 2, 2), (3, 2, 2), (3, 2, 3)):
            for p in foulkes_pairs(r):
                total = np.zeros((m * n) ** r, dtype=np.int64)
                for q in foulkes_pairs(r):
                    if q.coarsens(p) or q == p:
                        total += value_type_orbit_vector(q, m, n)
                assert np.array_equal(total, block_constant_vector(p, m, n))

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            block_constant_vector(pair([[1]], [[1]], 1), 400, 400)


class TestRank:
    def test_rank_helper(self):
        assert integer_matrix_rank([[1, 0], [0, 1]]) == 2
        assert integer_matrix_rank([[2, 4], [1, 2]]) == 1
        assert integer_matrix_rank([[0, 0]]) == 0
        assert integer_matrix_rank([[3, 1, 2], [6, 2, 4], [1, 1, 1]]) == 2

    def test_injective_exactly_in_range(self):
        assert foulkes_image_rank(2, 2, 2) == 3
        assert foulkes_image_rank(2, 1, 1) == 1
        assert foulkes_image_rank(3, 2, 3) == 11

    def test_boundary(self):
        for r in (1, 2, 3):
            for m in (1, 2, 3, 4):
                for n in (1, 2, 3, 4):
                    rank = foulkes_image_rank(r, m, n)
                    expected_injective = m >= r and n >= r
                    assert (rank == len(foulkes_pairs(r))) == expected_injective
                    truncated = sum(
                        1 for p in foulkes_pairs(r) if p.in_truncation(m, n)
                    )
                    assert rank == truncated


class TestActionCompatibility:
    def test_single_letters(self):
        for r in (1, 2, 3):
            for m, n in ((2, 2), (3, 3), (2, 4)):
                if (m * n) ** r > 4096:
                    continue
                for name in generator_names(r):
                    assert tensor_action_consistent(r, m, n, [name])

    def test_longer_word(self):
        assert tensor_action_consistent(3, 3, 3, ["p12", "s2", "p1"])

    def test_rank1_scalar(self):
        assert tensor_action_consistent(1, 3, 2, ["p1"])

    def test_rank2_parameter_specialisation(self):
        # the p1 column scalars specialise to m*n and m at (2, 2)
        assert tensor_action_consistent(2, 2, 2, ["p1", "p1"])


class TestOrbits:
    def test_orbit_fibers_match(self):
        for r, m, n in itertools.product((1, 2), repeat=3):
            assert tensor_basis_orbits(r, m, n) == value_type_fibers(r, m, n)

    def test_three_cubed(self):
        assert tensor_basis_orbits(3, 3, 3) == value_type_fibers(3, 3, 3)


class TestBimoduleSpotCheck:
    def test_trivial_multiplicity(self):
        m = n = 2
        projector = diagram_tensor_matrix(p_diagram(2, 1), m, n) @ diagram_tensor_matrix(
            p_diagram(2, 2), m, n
        )
        rows = [
            (block_constant_vector(p, m, n) @ projector).tolist()
            for p in foulkes_pairs(2)
        ]
        assert integer_matrix_rank(rows) == homogeneous_plethysm(2, 2, (4,)) == 1
