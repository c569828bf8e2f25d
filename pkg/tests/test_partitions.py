from itertools import combinations

import pytest

from lrhorn.errors import (
    DoesNotFitBoxError,
    InputError,
    NotDominoDecomposableError,
    NotSortedError,
    OddLengthError,
    RTooSmallError,
    SizeMismatchError,
)
from lrhorn.partitions import (
    complement,
    interlace_split,
    is_star_fixed_point,
    partition,
    partition_from_set,
    partitions_in_box,
    partitions_of,
    set_from_partition,
    star_pair,
    star_sets,
    tau_partitions,
    tau_sets,
    two_quotient,
    weight,
)


def box_pairs(rows, cols):
    shapes = list(partitions_in_box(rows, cols))
    return [(lam, mu) for lam in shapes for mu in shapes]


def tile_search(shape):
    """Independent oracle: can the shape be tiled by dominoes at all?"""
    cells = {(r, c) for r, row in enumerate(shape) for c in range(row)}

    def rec(free):
        if not free:
            return True
        r, c = min(free)
        for other in ((r, c + 1), (r + 1, c)):
            if other in free:
                if rec(free - {(r, c), other}):
                    return True
        return False

    return rec(frozenset(cells))


class TestCanonicalForm:
    def test_strips_trailing_zeros(self):
        assert partition([4, 4, 1, 1, 0, 0]) == (4, 4, 1, 1)
        assert partition([]) == ()
        assert partition([0, 0]) == ()

    def test_rejects_increasing(self):
        with pytest.raises(InputError):
            partition([1, 2])

    def test_rejects_negative(self):
        with pytest.raises(InputError):
            partition([2, -1])


class TestSetPartitionMap:
    def test_paper_examples(self):
        assert partition_from_set((2, 4)) == (2, 1)
        assert partition_from_set((1, 2, 3)) == ()
        assert partition_from_set((2, 3, 7, 8)) == (4, 4, 1, 1)

    def test_inverse_examples(self):
        assert set_from_partition((2, 1), 2) == (2, 4)
        assert set_from_partition((2, 1), 3) == (1, 3, 5)
        assert set_from_partition((), 3) == (1, 2, 3)

    def test_r_too_small(self):
        with pytest.raises(RTooSmallError):
            set_from_partition((2, 1), 1)

    def test_round_trip_over_box(self):
        for lam in partitions_in_box(3, 3):
            for r in range(len(lam), len(lam) + 3):
                assert partition_from_set(set_from_partition(lam, r)) == lam

    def test_every_subset_round_trips(self):
        for r in range(1, 4):
            for I in combinations(range(1, 7), r):
                assert set_from_partition(partition_from_set(I), r) == I


class TestTau:
    def test_paper_example_sets(self):
        assert tau_sets((2, 4), (1, 4)) == (2, 3, 7, 8)
        assert tau_sets((1,), (1,)) == (1, 2)
        assert tau_sets((1, 3, 5), (1, 2, 5)) == (1, 2, 4, 5, 9, 10)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            tau_sets((1, 2), (1,))

    def test_paper_example_partitions(self):
        assert tau_partitions((2, 1), (2,)) == (4, 4, 1, 1)
        assert tau_partitions((), ()) == ()

    def test_equal_pair_is_dilation(self):
        for lam in partitions_in_box(3, 3):
            expected = []
            for v in lam:
                expected += [2 * v, 2 * v]
            assert tau_partitions(lam, lam) == tuple(expected)

    def test_weight_is_doubled_sum(self):
        for lam, mu in box_pairs(3, 3):
            assert weight(tau_partitions(lam, mu)) == 2 * (weight(lam) + weight(mu))

    def test_padding_invariance(self):
        # recompute through explicit sets at padding r and r+1
        for lam, mu in box_pairs(4, 4):
            r = max(len(lam), len(mu), 1)
            for rr in (r, r + 1):
                F = tau_sets(set_from_partition(lam, rr), set_from_partition(mu, rr))
                assert partition_from_set(F) == tau_partitions(lam, mu)


class TestTwoQuotient:
    def test_inverts_paper_example(self):
        assert two_quotient((4, 4, 1, 1)) == ((2, 1), (2,))

    def test_round_trip_small(self):
        assert two_quotient((2, 2)) == ((1,), (1,))
        assert tau_partitions((1,), (1,)) == (2, 2)

    def test_not_decomposable(self):
        with pytest.raises(NotDominoDecomposableError):
            two_quotient((3, 2, 1))

    def test_parity_test_agrees_with_tiling_search(self):
        for n in range(0, 9):
            for shape in partitions_of(n):
                tileable = tile_search(shape)
                try:
                    lam, mu = two_quotient(shape)
                    assert tileable, shape
                    assert tau_partitions(lam, mu) == shape
                except NotDominoDecomposableError:
                    assert not tileable, shape

    def test_quotient_after_tau_is_identity(self):
        for lam, mu in box_pairs(3, 3):
            assert two_quotient(tau_partitions(lam, mu)) == (lam, mu)

    def test_tau_after_quotient_is_identity(self):
        for n in range(0, 17, 2):
            for shape in partitions_of(n):
                try:
                    lam, mu = two_quotient(shape)
                except NotDominoDecomposableError:
                    continue
                assert tau_partitions(lam, mu) == shape


class TestStar:
    def test_worked_example(self):
        assert star_pair((5, 5, 2, 2), (1, 1, 0, 0), 4) == ((4, 3, 1), (3, 2, 2, 1))

    def test_fixed_point(self):
        # mu1, lam1, mu2, lam2 = 3, 2, 1, 1 weakly decreasing
        assert star_pair((2, 1), (3, 1), 2) == ((2, 1), (3, 1))

    def test_single_cell(self):
        # lam*_1 = 1 - 1 + 0 = 0 and mu*_1 = 0 - 1 + 1 + 1 = 1
        assert star_pair((1,), (), 1) == ((), (1,))

    def test_weight_conserved_over_box(self):
        for lam, mu in box_pairs(4, 4):
            ls, ms = star_pair(lam, mu, 4)
            assert weight(ls) + weight(ms) == weight(lam) + weight(mu)

    def test_stays_in_box(self):
        for lam, mu in box_pairs(3, 3):
            ls, ms = star_pair(lam, mu, 3)
            assert len(ls) <= 3 and len(ms) <= 3
            assert (not ls or ls[0] <= 3) and (not ms or ms[0] <= 3)

    def test_fixed_point_characterization(self):
        for lam, mu in box_pairs(4, 4):
            fixed = star_pair(lam, mu, 4) == (lam, mu)
            assert fixed == is_star_fixed_point(lam, mu, 4)

    def test_sets_match_partitions(self):
        # derived through the set/partition correspondence
        n = 10
        for lam, mu in box_pairs(3, 3):
            p = 3
            I, J = set_from_partition(lam, p), set_from_partition(mu, p)
            Is, Js = star_sets(I, J)
            assert max(Is + Js) <= n
            ls, ms = star_pair(lam, mu, p)
            assert partition_from_set(Is) == ls
            assert partition_from_set(Js) == ms

    def test_sets_examples(self):
        assert star_sets((1,), (1,)) == ((1,), (1,))
        assert star_sets((2,), (1,)) == ((1,), (2,))

    def test_error_paths(self):
        from lrhorn.errors import PartsTooSmallError
        with pytest.raises(PartsTooSmallError):
            star_pair((2, 1), (1,), 1)
        with pytest.raises(SizeMismatchError):
            star_sets((1, 2), (1,))


class TestInterlaceSplit:
    def test_examples(self):
        assert interlace_split((3, 2, 1, 0)) == ((3, 1), (2, 0))
        assert interlace_split((4, 3, 2, 1)) == ((4, 2), (3, 1))
        assert interlace_split((5, 5, 5, 5)) == ((5, 5), (5, 5))

    def test_errors(self):
        with pytest.raises(OddLengthError):
            interlace_split((2, 1, 0))
        with pytest.raises(NotSortedError):
            interlace_split((1, 2))


class TestComplement:
    def test_examples(self):
        assert complement((2, 1), 2, 3) == (2, 1)
        assert complement((), 2, 2) == (2, 2)
        assert complement((3, 3), 2, 3) == ()

    def test_does_not_fit(self):
        with pytest.raises(DoesNotFitBoxError):
            complement((4,), 2, 3)

    def test_involution(self):
        for nu in partitions_in_box(3, 4):
            assert complement(complement(nu, 3, 4), 3, 4) == nu
