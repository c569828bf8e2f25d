from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest

from lrhorn.decompose import (
    Block,
    decompose_triple,
    repaint_canonicalize,
    validate_decomposition,
)
from lrhorn.errors import BadColoringError, HornViolatedError
from lrhorn.horn import horn_triples


def block(t, a, b, c):
    conv = lambda xs: tuple(Fraction(x) for x in xs)
    return Block(Fraction(t), conv(a), conv(b), conv(c))


def horn_feasible(a, b, c):
    for tr in horn_triples(len(a)):
        if sum(c[k - 1] for k in tr.K) > \
                sum(a[i - 1] for i in tr.I) + sum(b[j - 1] for j in tr.J):
            return False
    return True


class TestDecompose:
    def test_trivial_single_equality(self):
        assert decompose_triple((1,), (1,), (2,)) == [block(1, (1,), (1,), (2,))]

    def test_half_scaling(self):
        assert decompose_triple((2,), (2,), (2,)) == [
            block(Fraction(1, 2), (2,), (2,), (2,))]

    def test_reference_triple_decomposes_validly(self):
        a = b = (2, 1, 0)
        c = (3, 2, 1)
        blocks = decompose_triple(a, b, c)
        assert validate_decomposition(a, b, c, blocks)
        # with every proper inequality strict the minimal scaling is
        # pinned at the top, so the algorithm keeps one 3-block at t=1
        assert blocks == [block(1, a, b, c)]

    def test_validator_accepts_both_hand_decompositions(self):
        a = b = (2, 1, 0)
        c = (3, 2, 1)
        first = [block(1, (2,), (1,), (3,)), block(1, (1,), (0,), (1,)),
                 block(1, (0,), (2,), (2,))]
        second = [block(1, (1,), (2,), (3,)), block(1, (0,), (1,), (1,)),
                  block(1, (2,), (0,), (2,))]
        assert validate_decomposition(a, b, c, first)
        assert validate_decomposition(a, b, c, second)

    def test_validator_rejects_bad_t_and_bad_partition(self):
        a = b = (2, 1, 0)
        c = (3, 2, 1)
        wrong_t = [block(Fraction(1, 2), (2,), (1,), (3,)),
                   block(1, (1,), (0,), (1,)), block(1, (0,), (2,), (2,))]
        assert not validate_decomposition(a, b, c, wrong_t)
        not_partition = [block(1, (2,), (1,), (3,)), block(1, (1,), (1,), (2,)),
                         block(1, (0,), (2,), (2,))]
        assert not validate_decomposition(a, b, c, not_partition)

    def test_slack_triple_stays_whole(self):
        blocks = decompose_triple((3, 1), (3, 1), (2, 1))
        assert validate_decomposition((3, 1), (3, 1), (2, 1), blocks)

    def test_zero_c_gives_zero_scalings(self):
        blocks = decompose_triple((1, 0), (1, 0), (0, 0))
        assert validate_decomposition((1, 0), (1, 0), (0, 0), blocks)
        assert all(bl.t == 0 for bl in blocks)
        assert all(len(bl.a) == 1 for bl in blocks)

    def test_all_zero_triple(self):
        blocks = decompose_triple((0, 0), (0, 0), (0, 0))
        assert validate_decomposition((0, 0), (0, 0), (0, 0), blocks)

    def test_empty_triple(self):
        assert decompose_triple((), (), ()) == []

    def test_precondition_failure(self):
        with pytest.raises(HornViolatedError):
            decompose_triple((1,), (1,), (3,))
        with pytest.raises(HornViolatedError):
            decompose_triple((1,), (1,), (-1,))

    def test_round_trip_exhaustive(self):
        # every feasible integer triple with entries <= 3 and n <= 3
        for n in (1, 2, 3):
            seqs = list(combinations_with_replacement(range(3, -1, -1), n))
            for a in seqs:
                for b in seqs:
                    for c in seqs:
                        if not horn_feasible(a, b, c):
                            continue
                        blocks = decompose_triple(a, b, c)
                        assert validate_decomposition(a, b, c, blocks), (a, b, c)


class TestRepaint:
    def test_already_canonical(self):
        assert repaint_canonicalize((1, 2, 1, 2), 2) == []

    def test_single_interlace(self):
        steps = repaint_canonicalize((2, 1, 1, 2), 2)
        assert len(steps) == 1
        assert steps[0].coloring == (1, 2, 1, 2)
        assert set(steps[0].colors) == {1, 2}

    def test_three_colors(self):
        steps = repaint_canonicalize((2, 1, 3, 1, 2, 3), 3)
        assert steps[-1].coloring == (1, 2, 3, 1, 2, 3)
        prefixes = []
        for st in steps:
            k = 0
            while k < 6 and st.coloring[k] == k % 3 + 1:
                k += 1
            prefixes.append(k)
        assert prefixes == sorted(set(prefixes))  # strictly growing

    def test_every_step_is_balanced(self):
        steps = repaint_canonicalize((3, 3, 2, 2, 1, 1), 3)
        for st in steps:
            for color in (1, 2, 3):
                assert st.coloring.count(color) == 2

    def test_exhaustive_small(self):
        # all balanced colorings for (m, p) in {(2,2), (2,3), (3,2)}
        for m, p in ((2, 2), (2, 3), (3, 2)):
            base = tuple(c for c in range(1, m + 1) for _ in range(p))
            seen = set(permutations(base))
            for coloring in seen:
                steps = repaint_canonicalize(coloring, m)
                final = steps[-1].coloring if steps else coloring
                assert final == tuple(i % m + 1 for i in range(m * p))
                assert len(steps) <= m * p

    def test_bad_colorings(self):
        with pytest.raises(BadColoringError):
            repaint_canonicalize((1, 1, 2), 2)
        with pytest.raises(BadColoringError):
            repaint_canonicalize((1, 1, 1, 2), 2)
