"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Under pytest the lines are collected and shown in the terminal summary; run
``python3 tests/test_acceptance.py`` to print them directly.
"""

from __future__ import annotations

import functools
import sys
import time
from math import comb, factorial
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from catins.catabolism import (  # noqa: E402
    COLUMN,
    ROW,
    catabolizable_set,
    ctype_greedy,
    dominance_maxima,
    is_catabolizable,
    superstandard,
    superstandard_syt,
)
from catins.chains import family_with_lengths, greene_profile, is_family  # noqa: E402
from catins.cocharge import (  # noqa: E402
    cocharge_label,
    is_valid_cocharge_labeling,
    standard_word_from_labeling,
)
from catins.core import (  # noqa: E402
    all_standard_words,
    all_syt,
    apply_s,
    conjugate,
    hook_length_count,
    knuth_neighbors,
    partitions,
    row_insert,
    rowword,
    strictly_between,
)
from catins.frobenius import frobenius_table  # noqa: E402
from catins.insertion import F, run_F, run_algorithm3, step_bound  # noqa: E402
from catins.poset import cocyclage_edges, verify_graded  # noqa: E402
from oracles import count_syt, dominance, schensted  # noqa: E402

RESULTS: list[str] = []

GOLDEN = [
    ("023103120", ()),
    ("02310312", (1,)),
    ("30231031", (1,)),
    ("3023103", (1, 1)),
    ("4302310", (1, 1)),
    ("430231", (2, 1)),
    ("43023", (2, 2)),
    ("44302", (2, 2)),
    ("4430", (2, 2, 1)),
    ("443", (3, 2, 1)),
    ("44", (3, 2, 1, 1)),
    ("4", (3, 2, 1, 1, 1)),
    ("5", (3, 2, 1, 1, 1)),
    ("", (3, 2, 1, 1, 1, 1)),
]


def criterion(number: int, title: str, budget: float):
    """Time the check, record a PASS/FAIL line, and re-raise failures."""

    def wrap(func):
        @functools.wraps(func)
        def run():
            start = time.perf_counter()
            try:
                func()
            except Exception as exc:
                RESULTS.append(f"FAIL  {number:2d}  {title}  ({exc})")
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < budget
            RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {number:2d}  {title}  {elapsed:.2f}s / {budget:g}s")
            assert ok, f"took {elapsed:.1f}s, budget {budget}s"

        return run

    return wrap


def _corotations(n):
    for u in all_standard_words(n):
        if n > 1 and u[-1] != 1:
            yield u, (u[-1],) + u[:-1], cocharge_label(u)[-1] == 0


@criterion(1, "golden trace of the worked example", 1.0)
def test_golden_trace():
    w = (1, 6, 8, 4, 2, 9, 5, 7, 3)
    assert cocharge_label(w) == (0, 2, 3, 1, 0, 3, 1, 2, 0)
    lam, trace = run_F(w)
    got = [("".join(map(str, p.word)), p.nu) for p in trace.pairs()]
    assert got == GOLDEN, got
    assert len(trace.steps) == 13
    assert lam == (3, 2, 1, 1, 1, 1)


@criterion(2, "F = greedy ctype = maximum of the catabolizable set", 600.0)
def test_f_equals_ctype():
    for n in range(1, 8):
        count = 0
        for count, w in enumerate(all_standard_words(n), 1):
            t = row_insert(w)
            lam = F(w)
            assert lam == ctype_greedy(t), w
            if n <= 6:
                assert dominance_maxima(catabolizable_set(t)) == [lam], w
        assert count == factorial(n)


@criterion(3, "bounded insertion decides λ-catabolizability", 300.0)
def test_bounded_insertion():
    for n in range(1, 7):
        shapes = partitions(n)
        for w in all_standard_words(n):
            t = row_insert(w)
            for lam in shapes:
                assert run_algorithm3(w, lam) == is_catabolizable(t, lam, ROW), (w, lam)


@criterion(4, "row and column catabolism agree", 300.0)
def test_row_column():
    for n in range(1, 7):
        shapes = partitions(n)
        for t in all_syt(n):
            for lam in shapes:
                assert is_catabolizable(t, lam, ROW) == is_catabolizable(t, lam, COLUMN), (t, lam)
    for n in range(1, 8):
        for t in all_syt(n):
            assert ctype_greedy(t, ROW) == ctype_greedy(t, COLUMN), t


@criterion(5, "partial sums of ctype equal the chain statistic", 1800.0)
def test_greene():
    for n in range(1, 7):
        for w in all_standard_words(n):
            lam = F(w)
            assert greene_profile(cocharge_label(w)) == [sum(lam[:k]) for k in range(1, n + 1)], w


@criterion(6, "chain family with conjugate ctype lengths", 300.0)
def test_chain_lengths():
    for n in range(1, 6):
        for w in all_standard_words(n):
            z = cocharge_label(w)
            target = conjugate(F(w))
            fam = family_with_lengths(z, target)
            assert fam is not None, w
            assert is_family(z, fam) and fam.lengths() == target, w


@criterion(7, "cyclage poset graded by cocharge", 300.0)
def test_graded():
    for n in range(1, 7):
        for u, v, _ in _corotations(n):
            assert sum(cocharge_label(v)) == sum(cocharge_label(u)) + 1, u
        report = verify_graded(n)
        assert report.ok, report
        assert report.rank_range == (0, comb(n, 2))
        assert report.edges == len(cocyclage_edges(n))


@criterion(8, "non-zero corotations keep ctype, zero ones lower it", 300.0)
def test_corotations():
    for n in range(1, 7):
        for u, v, zero in _corotations(n):
            rel = dominance(F(u), F(v))
            assert rel == ("geq" if zero else "equal"), (u, rel)


@criterion(9, "ascent edges weakly lower ctype", 300.0)
def test_ascents():
    for n in range(1, 7):
        for u in all_standard_words(n):
            z = cocharge_label(u)
            for i in range(1, n):
                if abs(u[i - 1] - u[i]) != 1 and z[i - 1] > z[i]:
                    assert dominance(F(u), F(apply_s(u, i))) in ("geq", "equal"), (u, i)


@criterion(10, "comparable but non-covering ctype pairs", 5.0)
def test_non_covering_pairs():
    pairs = [
        ((0, 0, 1, 1, 0), (1, 0, 0, 1, 1), (3, 1, 1), (2, 1, 1, 1)),
        ((1, 1, 2, 2, 0, 0, 1, 0), (1, 1, 2, 2, 0, 0, 0, 1), (3, 3, 1, 1), (3, 2, 1, 1, 1)),
    ]
    for zu, zv, lu, lv in pairs:
        u, v = standard_word_from_labeling(zu), standard_word_from_labeling(zv)
        assert F(u) == lu and F(v) == lv
        assert dominance(lu, lv) == "geq"
        assert strictly_between(lu, lv), (lu, lv)


@criterion(11, "F invariant under the generating moves", 300.0)
def test_invariance():
    for n in range(1, 7):
        for w in all_standard_words(n):
            lam = F(w)
            z = cocharge_label(w)
            for v in knuth_neighbors(w):
                assert F(v) == lam, (w, v)
            for i in range(1, n):
                if abs(z[i - 1] - z[i]) > 1:
                    assert F(apply_s(w, i)) == lam, (w, i)
            if n > 1 and w[-1] != 1 and z[-1] != 0:
                assert F((w[-1],) + w[:-1]) == lam, w
    for lam in partitions(7):
        assert F(rowword(superstandard_syt(lam))) == lam
        assert [list(r) for r in superstandard_syt(lam).rows] == schensted(rowword(superstandard_syt(lam)))
        assert sorted(rowword(superstandard(lam))) == sorted(cocharge_label(rowword(superstandard_syt(lam))))


@criterion(12, "insertion states stay valid and terminate", 300.0)
def test_trace_validity():
    for n in range(1, 7):
        for w in all_standard_words(n):
            _, trace = run_F(w)
            assert len(trace.steps) <= step_bound(n) == n + comb(n, 2), w
            for pair in trace.pairs():
                assert is_valid_cocharge_labeling(pair.full_word()), (w, pair)


@criterion(13, "Garnir coefficient and SYT totals of the Frobenius table", 300.0)
def test_frobenius():
    for n in range(1, 7):
        for lam in partitions(n):
            coeffs = frobenius_table(lam)[lam]
            d = sum(i * part for i, part in enumerate(lam))
            assert not any(coeffs[:d]) and coeffs[d] == 1, lam
        for shape, coeffs in frobenius_table((1,) * n).items():
            assert sum(coeffs) == count_syt(shape) == hook_length_count(shape), shape


if __name__ == "__main__":
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_"):
            try:
                func()
            except Exception:
                failed += 1
            print(RESULTS[-1])
    sys.exit(1 if failed else 0)
