"""Acceptance gate: nine criteria, one pass/fail line each.

Each test prints "ACCEPTANCE <num> <name>: PASS" (or FAIL) straight to
the terminal, bypassing capture, so the gate is readable in any pytest
run.  Tolerances are pinned in the asserts; everything else is exact.
"""

import random
import time

from oracles import longest_nondecreasing_len, longest_nonincreasing_len
from wordgen import grid_word, uniform_word, word_with_repeats
from wordpat.algebra import direct_power, direct_sum, skew_power, skew_sum
from wordpat.construction import build, max_monotone_of_r, verify, verify_q_lemma
from wordpat.monotone import NONDECREASING, NONINCREASING, es_extract
from wordpat.oracle import (
    check_unavoidability_balanced,
    enumerate_balanced,
    enumerate_cayley,
    max_repeats_avoiding,
)
from wordpat.patterns import family, find_family_member, base_pattern
from wordpat.witness import extract_witness, validate_trace
from wordpat.words import (
    contains,
    multiplicities,
    repeats,
    standardise,
    subword,
)


def _report(capsys, num, name, body):
    try:
        body()
    except BaseException:
        with capsys.disabled():
            print(f"ACCEPTANCE {num} {name}: FAIL")
        raise
    with capsys.disabled():
        print(f"ACCEPTANCE {num} {name}: PASS")


def test_criterion_1_worked_examples(capsys):
    def body():
        assert standardise((2, 9, 6, 8, 9, 3)) == (0, 4, 2, 3, 4, 1)
        assert repeats((0, 0, 0, 0)) == 3
        assert repeats((0, 0, 1, 1, 0)) == 3
        assert contains((1, 3, 0, 4, 3, 1, 3, 4), (1, 1, 0, 1)) is not None
        assert direct_sum((3, 1, 4, 2, 2), (4, 1, 3, 2)) == (3, 1, 4, 2, 2, 8, 5, 7, 6)
        assert direct_power((2, 1), 3) == (2, 1, 4, 3, 6, 5)
        assert skew_sum((2, 4, 1, 3), (1, 2, 1)) == (4, 6, 3, 5, 1, 2, 1)
        assert skew_power((1, 2), 3) == (5, 6, 3, 4, 1, 2)
        assert build(3, 1).r == (7, 8, 9, 4, 5, 6, 1, 2, 3)

    _report(capsys, 1, "worked examples", body)


def test_criterion_2_construction_verifies(capsys):
    def body():
        start = time.perf_counter()
        small = verify(2, 1)
        small_elapsed = time.perf_counter() - start
        assert small.length == 128
        assert small.repeats == 64
        assert small.multiplicity_ok
        assert len(small.avoided) == 7 and all(small.avoided.values())
        assert small_elapsed < 1.0

        start = time.perf_counter()
        big = verify(3, 1)
        big_elapsed = time.perf_counter() - start
        assert big.length == 1458
        assert big.repeats == 729
        assert big.multiplicity_ok
        assert all(big.avoided.values())
        assert big_elapsed < 300.0

    _report(capsys, 2, "constructed words avoid the family", body)


def test_criterion_3_intermediate_word_checks(capsys):
    def body():
        for n in (1, 2, 3):
            assert verify_q_lemma(n, 1).ok
        assert max_monotone_of_r(3, 1).longest == 3

    _report(capsys, 3, "intermediate word avoidance", body)


def test_criterion_4_extraction_soundness(capsys):
    def body():
        start = time.perf_counter()
        rng = random.Random(2024)
        for n, k in [(1, 1), (1, 2), (2, 1)]:
            target = k * n**6 + 1
            for i in range(1000):
                capped = i % 5 != 0  # every fifth word may carry tall spikes
                w = word_with_repeats(rng, target, k, cap=capped)
                assert repeats(w) == target
                fid, occ, trace = extract_witness(w, n, k)
                assert standardise(subword(w, occ)) == base_pattern(fid)
                assert validate_trace(w, trace)
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0

        # Exhaustive at n = 1, k = 1: every standardised word of length
        # <= 8 with exactly 2 repeats and all multiplicities >= 2.
        checked = 0
        for length in range(9):
            for w in enumerate_cayley(length):
                if repeats(w) != 2:
                    continue
                if min(multiplicities(w).values()) < 2:
                    continue
                fid, occ, trace = extract_witness(w, 1, 1)
                assert validate_trace(w, trace)
                checked += 1
        assert checked == 7  # 000 plus the six arrangements of 0011

    _report(capsys, 4, "witness extraction sound", body)


def test_criterion_5_tightness_small_parameters(capsys):
    def body():
        best, witness = max_repeats_avoiding(1, 1, 3)
        assert best == 1
        assert standardise(witness) == (0, 0)
        assert max_repeats_avoiding(1, 2, 2)[0] == 2

    _report(capsys, 5, "threshold tight at smallest size", body)


def test_criterion_6_balanced_unavoidability(capsys):
    def body():
        for k, count in [(1, 6), (2, 20), (3, 70)]:
            assert sum(1 for _ in enumerate_balanced(2, k + 1)) == count
            assert check_unavoidability_balanced(1, k)

    _report(capsys, 6, "balanced family unavoidable", body)


def test_criterion_7_checkers_match_backtracking(capsys):
    def body():
        rng = random.Random(7777)
        fids = []
        for n in (1, 2):
            for k in (1, 2):
                fids.extend(fid for fid, _ in family(n, k))
        pairs = 0
        for _ in range(500):
            length = rng.randint(0, 14)
            w = uniform_word(rng, length, rng.randint(1, 6))
            for fid in fids:
                fast = find_family_member(w, fid)
                slow = contains(w, base_pattern(fid))
                assert (fast is None) == (slow is None), (w, str(fid))
                if fast is not None:
                    assert standardise(subword(w, fast)) == base_pattern(fid)
                pairs += 1
        assert pairs >= 10_000

    _report(capsys, 7, "specialized checkers agree with backtracking", body)


def test_criterion_8_monotone_guarantee(capsys):
    def body():
        rng = random.Random(88)
        for r in range(1, 7):
            for s in range(1, 7):
                for _ in range(200):
                    w = uniform_word(rng, r * s + 1, rng.randint(1, 9))
                    direction, occ = es_extract(w, r, s)
                    vals = subword(w, occ)
                    if direction == NONDECREASING:
                        assert len(occ) == r + 1
                        assert all(a <= b for a, b in zip(vals, vals[1:]))
                    else:
                        assert direction == NONINCREASING
                        assert len(occ) == s + 1
                        assert all(a >= b for a, b in zip(vals, vals[1:]))

                # The bound is sharp in aggregate: among 200 words of
                # length r*s at least one stays under both limits.
                tight = 0
                for _ in range(200):
                    if rng.random() < 0.5:
                        w = grid_word(rng, r, s)
                    else:
                        w = uniform_word(rng, r * s, rng.randint(1, 9))
                    if (
                        longest_nondecreasing_len(w) <= r
                        and longest_nonincreasing_len(w) <= s
                    ):
                        tight += 1
                assert tight >= 1, (r, s)

    _report(capsys, 8, "monotone extraction guarantee", body)


def test_criterion_9_algebra_laws(capsys):
    def body():
        rng = random.Random(99)
        for _ in range(1000):
            a, b, c = (
                tuple(
                    rng.randint(1, 9) for _ in range(rng.randint(1, 8))
                )
                for _ in range(3)
            )
            assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))
            assert skew_sum(skew_sum(a, b), c) == skew_sum(a, skew_sum(b, c))
            for op in (direct_sum, skew_sum):
                out = op(a, b)
                assert len(out) == len(a) + len(b)
                assert max(out) == max(a) + max(b)

    _report(capsys, 9, "algebra laws", body)
