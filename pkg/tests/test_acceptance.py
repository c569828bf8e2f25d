"""Acceptance suite: one test per criterion, timed against its budget.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction

from lrhorn.cli import main
from lrhorn.conjectures import verify_schur_domination, verify_star_conjecture, verify_tau_domination
from lrhorn.decompose import Block, decompose_triple, validate_decomposition
from lrhorn.domino import count_ydt_by_weight
from lrhorn.horn import (
    check_pxyq,
    horn_cone_membership,
    horn_triples,
    p1n2_complete,
    triple_map_ffg,
)
from lrhorn.lr import schur_product
from lrhorn.partitions import (
    interlace_split,
    partitions_in_box,
    partitions_of,
    star_pair,
    tau_partitions,
    weight,
)
from lrhorn.spectra import (
    eigenvalues_sym,
    frobenius_norm,
    random_with_spectrum,
    sample_verify_combined_cone,
    sample_verify_offdiag,
    sample_verify_theorem1,
)


@contextmanager
def criterion(number, budget_seconds):
    start = time.monotonic()
    failed = True
    try:
        yield
        failed = False
    finally:
        elapsed = time.monotonic() - start
        verdict = "FAIL" if failed else "PASS"
        print(f"ACCEPTANCE {number}: {verdict} ({elapsed:.2f}s, budget {budget_seconds}s)")
    assert elapsed < budget_seconds, f"criterion {number} exceeded {budget_seconds}s"


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_01_reference_schur_products(capsys):
    with criterion(1, 1.0):
        expected = {
            ("3,1", "2"): {(5, 1): 1, (4, 2): 1, (3, 3): 1, (4, 1, 1): 1,
                           (3, 2, 1): 1},
            ("3,2", "1"): {(4, 2): 1, (3, 3): 1, (3, 2, 1): 1},
            ("3", "2,1"): {(5, 1): 1, (4, 2): 1, (4, 1, 1): 1, (3, 2, 1): 1},
        }
        for (lam, mu), terms in expected.items():
            code, out = run_cli(capsys, "schur-mult", lam, mu, "--json")
            assert code == 0
            got = {tuple(t["nu"]): t["c"] for t in json.loads(out)["terms"]}
            assert got == terms, (lam, mu)


def test_02_domino_census(capsys):
    with criterion(2, 1.0):
        code, out = run_cli(capsys, "ydt", "4,4,1,1", "--yamanouchi", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 4
        got = {tuple(t["word"]): tuple(t["weight"]) for t in data["tableaux"]}
        assert got == {
            (1, 2, 1, 1, 2): (3, 2),
            (1, 1, 1, 1, 2): (4, 1),
            (1, 2, 1, 1, 3): (3, 1, 1),
            (1, 2, 1, 2, 3): (2, 2, 1),
        }


def test_03_rule_equivalence_3x3():
    with criterion(3, 60.0):
        shapes = list(partitions_in_box(3, 3))
        for lam in shapes:
            for mu in shapes:
                census = count_ydt_by_weight(tau_partitions(lam, mu))
                # dict equality covers every compatible weight: a shape
                # missing from both sides has coefficient 0 in both rules
                assert census == schur_product(lam, mu).terms, (lam, mu)


def test_04_horn_triples(capsys):
    with criterion(4, 1.0):
        code, out = run_cli(capsys, "horn-triples", "1")
        assert code == 0 and out.strip() == "{1} {1} {1}"
        code, out = run_cli(capsys, "horn-triples", "2")
        assert code == 0
        assert out.splitlines() == [
            "{1} {1} {1}", "{1} {2} {2}", "{2} {1} {2}", "{1,2} {1,2} {1,2}"]


def test_05_combined_spectrum_intervals():
    with criterion(5, 1.0):
        gamma = (4, 3, 2, 1)
        total = sum(gamma)
        expected = {
            ((4, 2), (3, 1)): (Fraction(5), Fraction(7)),
            ((4, 1), (3, 2)): (Fraction(6), Fraction(7)),
            ((4, 3), (2, 1)): (Fraction(5), Fraction(6)),
        }
        for (a, b), (lo, hi) in expected.items():
            members = []
            c1 = Fraction(total, 2)           # below this c is not descending
            while c1 <= total:
                if horn_cone_membership(a, b, (c1, total - c1)).holds:
                    members.append(c1)
                c1 += Fraction(1, 4)
            assert members and members[0] == lo and members[-1] == hi
            assert members == [lo + Fraction(k, 4)
                               for k in range(int(4 * (hi - lo)) + 1)]
        assert interlace_split(gamma) == ((4, 2), (3, 1))


def test_06_star_pair_example():
    with criterion(6, 1.0):
        assert star_pair((5, 5, 2, 2), (1, 1, 0, 0), 4) == \
            ((4, 3, 1), (3, 2, 2, 1))


def test_07_star_conjecture_boxes():
    # every box with p*q <= 12 is contained in one of these six
    with criterion(7, 600.0):
        for p, q in ((12, 1), (6, 2), (4, 3), (3, 4), (2, 6), (1, 12)):
            report = verify_star_conjecture(p, q)
            assert report.status == "pass", (p, q, report.violations)


def test_08_proved_domination_sweeps():
    with criterion(8, 600.0):
        report = verify_tau_domination(6)
        assert report.status == "pass", report.violations

        for p in (1, 2, 3):
            for n in range(0, 13):
                for gamma in partitions_of(n, max_len=2 * p):
                    rep = verify_schur_domination(gamma, p=p)
                    support_bugs = [v for v in rep.violations
                                    if v["kind"] == "support"]
                    assert not support_bugs, (gamma, p, support_bugs)
                    assert rep.status == "pass", (gamma, p, rep.violations)

        for p in (1, 2, 3):
            for t in horn_triples(p):
                doubled = triple_map_ffg(t)   # re-certifies internally
                assert doubled in horn_triples(2 * p, 2 * t.r)


def test_09_decomposition():
    with criterion(9, 1.0):
        a = b = (2, 1, 0)
        c = (3, 2, 1)
        blocks = decompose_triple(a, b, c)
        assert validate_decomposition(a, b, c, blocks)

        def blk(t, xs, ys, zs):
            conv = lambda s: tuple(Fraction(x) for x in s)
            return Block(Fraction(t), conv(xs), conv(ys), conv(zs))

        hand_one = [blk(1, (2,), (1,), (3,)), blk(1, (1,), (0,), (1,)),
                    blk(1, (0,), (2,), (2,))]
        hand_two = [blk(1, (1,), (2,), (3,)), blk(1, (0,), (1,), (1,)),
                    blk(1, (2,), (0,), (2,))]
        assert validate_decomposition(a, b, c, hand_one)
        assert validate_decomposition(a, b, c, hand_two)


def test_10_numeric_harness():
    with criterion(10, 60.0):
        for p, n in ((1, 2), (1, 3), (2, 4), (2, 5)):
            rep = sample_verify_theorem1(p, n, 1000, seed=42)
            assert rep.ok and rep.min_margin >= -1e-9, rep.violations[:3]
            rep = sample_verify_offdiag(p, n, 1000, seed=43)
            assert rep.ok and rep.min_margin >= -1e-9, rep.violations[:3]
        for p in (1, 2, 3):
            rep = sample_verify_combined_cone(p, 1000, seed=44)
            assert rep.ok and rep.min_margin >= -1e-9, rep.violations[:3]

        import random
        rng = random.Random(7)
        for n in (2, 5, 8, 12):
            d = sorted((rng.uniform(-5, 5) for _ in range(n)), reverse=True)
            m = random_with_spectrum(d, seed=n)
            got = eigenvalues_sym(m)
            assert max(abs(x - y) for x, y in zip(got, d)) <= 1e-10


def test_11_converse_failure_witness():
    with criterion(11, 1.0):
        assert check_pxyq((2, 1), (Fraction(3, 2),), (0,), "ffg-only").holds
        assert not p1n2_complete(2, 1, Fraction(3, 2), 0)
