"""Exhaustive verification sweep behind ``catins verify``.

Each check runs over every standard word (or tableau, or partition) of one
size and returns how many cases it examined plus the first counterexample.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from catins.catabolism import (
    COLUMN,
    ROW,
    catabolizable_set,
    ctype_greedy,
    dominance_maxima,
    is_catabolizable,
    superstandard_syt,
)
from catins.chains import family_with_lengths, greene_profile, is_family
from catins.cocharge import cocharge_label, is_valid_cocharge_labeling, standard_word_from_labeling
from catins.core import (
    Dominance,
    all_standard_words,
    all_syt,
    apply_s,
    conjugate,
    dominance_geq,
    dominates,
    knuth_neighbors,
    partitions,
    row_insert,
    rowword,
)
from catins.frobenius import frobenius_table, minimal_degree
from catins.insertion import F, run_F, run_algorithm3, step_bound
from catins.poset import edge_flags, verify_graded

Outcome = tuple[int, object]


@dataclass
class CheckResult:
    name: str
    n: int
    checked: int
    counterexample: object = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _knuth_preserves_p(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        p = row_insert(w)
        for v in knuth_neighbors(w):
            count += 1
            if row_insert(v) != p:
                return count, (w, v)
    return count, None


def _insert_reading_word(n: int) -> Outcome:
    syt = all_syt(n)
    for count, t in enumerate(syt, 1):
        if row_insert(rowword(t)) != t:
            return count, t
    return len(syt), None


def _cocharge_preserving(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        z = cocharge_label(w)
        for i in range(1, n):
            count += 1
            v = apply_s(w, i)
            zv = cocharge_label(v)
            conds = (
                abs(w[i - 1] - w[i]) != 1,
                apply_s(z, i) == zv,
                sorted(z) == sorted(zv),
                sum(z) == sum(zv),
            )
            if len(set(conds)) != 1:
                return count, (w, i, conds)
    return count, None


def _round_trip(n: int) -> Outcome:
    count = 0
    for count, w in enumerate(all_standard_words(n), 1):
        z = cocharge_label(w)
        if not is_valid_cocharge_labeling(z) or standard_word_from_labeling(z) != w:
            return count, w
    return count, None


def _trace_validity(n: int) -> Outcome:
    count = 0
    for count, w in enumerate(all_standard_words(n), 1):
        _, trace = run_F(w)
        if len(trace.steps) > step_bound(n):
            return count, (w, "too many steps")
        prev = trace.pairs()[0]
        for pair in trace.pairs()[1:]:
            full = pair.full_word()
            if not is_valid_cocharge_labeling(full):
                return count, (w, pair)
            shrank = len(pair.word) == len(prev.word) - 1
            rose = sum(full) == sum(prev.full_word()) + 1
            if not (shrank or rose):
                return count, (w, prev, pair)
            prev = pair
    return count, None


def _nonzero_corotation_invariance(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        if n < 2 or w[-1] == 1 or cocharge_label(w)[-1] == 0:
            continue
        count += 1
        v = (w[-1],) + w[:-1]
        if F(v) != F(w):
            return count, (w, v)
    return count, None


def _catabolism_transformation_invariance(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        z = cocharge_label(w)
        lam = F(w)
        for i in range(1, n):
            if abs(z[i - 1] - z[i]) > 1:
                count += 1
                if F(apply_s(w, i)) != lam:
                    return count, (w, i)
    return count, None


def _knuth_invariance(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        lam = F(w)
        for v in knuth_neighbors(w):
            count += 1
            if F(v) != lam:
                return count, (w, v)
    return count, None


def _f_equals_greedy(n: int) -> Outcome:
    count = 0
    for count, w in enumerate(all_standard_words(n), 1):
        t = row_insert(w)
        lam = F(w)
        if lam != ctype_greedy(t, ROW) or lam != ctype_greedy(t, COLUMN):
            return count, w
    return count, None


def _algorithm3(n: int) -> Outcome:
    count = 0
    shapes = partitions(n)
    for w in all_standard_words(n):
        t = row_insert(w)
        for lam in shapes:
            count += 1
            if run_algorithm3(w, lam) != is_catabolizable(t, lam, ROW):
                return count, (w, lam)
    return count, None


def _row_column_agree(n: int) -> Outcome:
    count = 0
    shapes = partitions(n)
    for t in all_syt(n):
        for lam in shapes:
            count += 1
            if is_catabolizable(t, lam, ROW) != is_catabolizable(t, lam, COLUMN):
                return count, (t, lam)
    return count, None


def _unique_maximum(n: int) -> Outcome:
    syt = all_syt(n)
    for count, t in enumerate(syt, 1):
        if dominance_maxima(catabolizable_set(t)) != [ctype_greedy(t)]:
            return count, t
    return len(syt), None


def _normalization(n: int) -> Outcome:
    shapes = partitions(n)
    for count, lam in enumerate(shapes, 1):
        if F(rowword(superstandard_syt(lam))) != lam:
            return count, lam
    return len(shapes), None


def _greene(n: int) -> Outcome:
    count = 0
    for count, w in enumerate(all_standard_words(n), 1):
        lam = F(w)
        expected = [sum(lam[:k]) for k in range(1, n + 1)]
        if greene_profile(cocharge_label(w)) != expected:
            return count, w
    return count, None


def _chain_lengths(n: int) -> Outcome:
    count = 0
    for count, w in enumerate(all_standard_words(n), 1):
        z = cocharge_label(w)
        target = conjugate(F(w))
        fam = family_with_lengths(z, target)
        if fam is None or not is_family(z, fam) or fam.lengths() != target:
            return count, w
    return count, None


def _corotations(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        if n < 2 or w[-1] == 1:
            continue
        count += 1
        v = (w[-1],) + w[:-1]
        zero = cocharge_label(w)[-1] == 0
        rel = dominance_geq(F(w), F(v))
        if (not zero and rel is not Dominance.EQUAL) or (zero and rel is not Dominance.GEQ):
            return count, (w, v, rel)
    return count, None


def _ascents(n: int) -> Outcome:
    count = 0
    for w in all_standard_words(n):
        z = cocharge_label(w)
        for i in range(1, n):
            if abs(w[i - 1] - w[i]) != 1 and z[i - 1] > z[i]:
                count += 1
                if not dominates(F(w), F(apply_s(w, i))):
                    return count, (w, i)
    return count, None


def _graded(n: int) -> Outcome:
    flags = edge_flags(n)
    for (s, t), seen in flags.items():
        if len(seen) != 1:
            return len(flags), (s, t)
    report = verify_graded(n)
    return report.edges, None if report.ok else report


def _garnir(n: int) -> Outcome:
    shapes = partitions(n)
    for count, lam in enumerate(shapes, 1):
        coeffs = frobenius_table(lam)[lam]
        d = minimal_degree(lam)
        if any(coeffs[:d]) or coeffs[d] != 1:
            return count, lam
    return len(shapes), None


# name, check, largest size it is run at
CHECKS: list[tuple[str, Callable[[int], Outcome], int]] = [
    ("Knuth moves preserve the insertion tableau", _knuth_preserves_p, 99),
    ("P(rowword(T)) = T", _insert_reading_word, 99),
    ("cocharge-preserving swap conditions agree", _cocharge_preserving, 99),
    ("labelings round-trip to standard words", _round_trip, 99),
    ("insertion states stay valid and terminate in time", _trace_validity, 7),
    ("F invariant under non-zero corotations", _nonzero_corotation_invariance, 99),
    ("F invariant under catabolism transformations", _catabolism_transformation_invariance, 99),
    ("F invariant under Knuth moves", _knuth_invariance, 99),
    ("F = greedy row ctype = greedy column ctype", _f_equals_greedy, 8),
    ("bounded insertion decides λ-catabolizability", _algorithm3, 6),
    ("row and column λ-catabolizability agree", _row_column_agree, 6),
    ("catabolizable set has ctype as unique maximum", _unique_maximum, 6),
    ("F(rowword(Z*_λ)) = λ", _normalization, 99),
    ("sum of first k parts of ctype = I_k", _greene, 6),
    ("chain family with conjugate lengths exists", _chain_lengths, 5),
    ("corotations: non-zero keep ctype, zero lower it", _corotations, 99),
    ("ascents weakly lower ctype", _ascents, 99),
    ("cyclage poset graded by cocharge", _graded, 6),
    ("Garnir tableau: minimal degree, coefficient 1", _garnir, 6),
]


def run_suite(n: int, on_result: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    results = []
    for name, check, cap in CHECKS:
        for size in range(1, min(n, cap) + 1):
            start = time.perf_counter()
            checked, bad = check(size)
            res = CheckResult(name, size, checked, bad, time.perf_counter() - start)
            results.append(res)
            if on_result is not None:
                on_result(res)
            if bad is not None:
                break
    return results
