from math import comb

import pytest

from catins.catabolism import ctype_greedy, is_catabolizable, superstandard, superstandard_syt
from catins.cocharge import cocharge_label, is_valid_cocharge_labeling, standard_word_from_labeling
from catins.core import all_standard_words, apply_s, knuth_neighbors, partitions, row_insert, rowword
from catins.insertion import (
    CATABOLISM_TRANSFORMATION,
    COROTATION,
    INSERTION,
    KNUTH,
    REJECT,
    F,
    WordPartitionPair,
    algorithm3_trace,
    expand_step,
    is_ascent,
    is_catabolism_transformation,
    run_algorithm3,
    run_F,
    step_f,
    step_f_lambda,
)
from conftest import WORKED_LABELING, WORKED_WORD

# (word, nu) after each step of the worked example, read off the printed table
WORKED_TABLE = [
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


def _w(s):
    return tuple(int(c) for c in s)


def test_worked_trace():
    lam, trace = run_F(WORKED_WORD)
    assert trace.initial == WORKED_LABELING
    assert lam == (3, 2, 1, 1, 1, 1)
    assert len(trace.steps) == 13
    assert [(p.word, p.nu) for p in trace.pairs()] == [(_w(s), nu) for s, nu in WORKED_TABLE]


def test_step_f_examples():
    pair, step = step_f(WordPartitionPair(WORKED_LABELING, ()))
    assert pair == (_w("02310312"), (1,)) and step.kind == INSERTION and step.presented == 0
    pair, step = step_f(pair)
    assert pair == (_w("30231031"), (1,)) and step.kind == COROTATION and step.presented == 2
    assert step_f(WordPartitionPair((0,), ()))[0] == ((), (1,))
    with pytest.raises(ValueError):
        step_f(WordPartitionPair((), (1,)))


@pytest.mark.parametrize("n", range(1, 8))
def test_identity_word(n):
    lam, trace = run_F(tuple(range(1, n + 1)))
    assert lam == (n,)
    assert len(trace.steps) == n
    assert all(s.kind == INSERTION for s in trace.steps)


@pytest.mark.parametrize("n", range(1, 7))
def test_trace_invariants(n):
    for w in all_standard_words(n):
        lam, trace = run_F(w)
        assert lam == F(w)
        assert len(trace.steps) <= n + comb(n, 2)
        pairs = trace.pairs()
        for prev, pair in zip(pairs, pairs[1:]):
            full = pair.full_word()
            assert is_valid_cocharge_labeling(full)
            shrank = len(pair.word) == len(prev.word) - 1
            rose = sum(full) == sum(prev.full_word()) + 1
            assert shrank or rose
        for prev, s in zip(pairs, trace.steps):
            grown = list(prev.nu) + [0] * (s.presented + 1)
            grown[s.presented] += 1
            assert (s.kind == INSERTION) == (s.result.nu == tuple(p for p in grown if p))


@pytest.mark.parametrize("n", range(1, 8))
def test_F_equals_greedy_ctype(n):
    for w in all_standard_words(n):
        assert F(w) == ctype_greedy(row_insert(w))


@pytest.mark.parametrize("n", range(2, 7))
def test_F_invariances(n):
    for w in all_standard_words(n):
        lam = F(w)
        z = cocharge_label(w)
        for v in knuth_neighbors(w):
            assert F(v) == lam
        for i in range(1, n):
            if is_catabolism_transformation(z, i):
                assert F(apply_s(w, i)) == lam
        if w[-1] != 1 and z[-1] > 0:
            assert F((w[-1],) + w[:-1]) == lam


@pytest.mark.parametrize("n", range(1, 8))
def test_normalization(n):
    for lam in partitions(n):
        assert F(rowword(superstandard_syt(lam))) == lam
        assert F(rowword(superstandard(lam)), labeled=True) == lam


def test_moves_predicates():
    assert is_catabolism_transformation((0, 2, 1), 1)
    assert not is_catabolism_transformation((0, 1, 1), 1)
    assert is_ascent((1, 0, 0), 1)
    # swapping the letters 1 and 2 is not cocharge preserving
    assert not is_ascent((1, 0), 1)
    with pytest.raises(IndexError):
        is_ascent((1, 0), 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_catabolism_transformations_with_descent_are_ascents(n):
    for w in all_standard_words(n):
        z = cocharge_label(w)
        for i in range(1, n):
            if is_catabolism_transformation(z, i) and z[i - 1] > z[i]:
                assert is_ascent(z, i)


def _replay(pair):
    cur = pair.full_word()
    for m in expand_step(pair):
        assert m.before == cur
        if m.kind == KNUTH:
            assert m.after == apply_s(cur, m.position)
            assert m.after in knuth_neighbors(cur)
        elif m.kind == CATABOLISM_TRANSFORMATION:
            assert is_catabolism_transformation(cur, m.position)
            assert m.after == apply_s(cur, m.position)
        else:
            assert m.kind == COROTATION
            assert cur[-1] > 0
            assert m.after == (cur[-1] + 1,) + cur[:-1]
        assert is_valid_cocharge_labeling(m.after)
        cur = m.after
    return cur


def test_expand_step_examples():
    # insertion: only Knuth moves, landing on Z_(nu + e_{a+1})
    moves = expand_step(WordPartitionPair((0, 0), (2, 1)))
    assert all(m.kind == KNUTH for m in moves)
    assert _replay(WordPartitionPair((0, 0), (2, 1))) == (0,) + rowword(superstandard((3, 1)))
    # corotation of the label 2 at nu = (1): it is bubbled right, then moved to the front as 3
    pair = WordPartitionPair(_w("02310312"), (1,))
    moves = expand_step(pair)
    assert [m.kind for m in moves] == [CATABOLISM_TRANSFORMATION, COROTATION]
    assert _replay(pair) == _w("30231031") + (0,)
    with pytest.raises(ValueError):
        expand_step(WordPartitionPair((), ()))


@pytest.mark.parametrize("n", range(1, 6))
def test_expand_step_replay(n):
    for w in all_standard_words(n):
        _, trace = run_F(w)
        pairs = trace.pairs()
        for pair, nxt in zip(pairs, pairs[1:]):
            assert _replay(pair) == nxt.full_word()


def test_algorithm3_examples():
    assert run_algorithm3(WORKED_WORD, (3, 2, 1, 1, 1, 1))
    assert not run_algorithm3(WORKED_WORD, (4, 2, 1, 1, 1))
    assert run_algorithm3((1, 2, 3, 4), (4,))
    # a one-row tableau is catabolizable for every shape of its size
    assert run_algorithm3((1, 2, 3, 4), (3, 1))
    assert is_catabolizable(row_insert((1, 2, 3, 4)), (3, 1))
    with pytest.raises(ValueError):
        run_algorithm3((1, 2, 3), (2, 2))


def test_step_f_lambda_rejects():
    pair = WordPartitionPair((0, 1), (1,))
    same, step = step_f_lambda(pair, (2,))
    assert step.kind == REJECT and same == pair
    ok, trace = algorithm3_trace((2, 1), (2,))
    assert not ok and trace.steps[-1].kind == REJECT


@pytest.mark.parametrize("n", range(1, 7))
def test_algorithm3_matches_definition(n):
    shapes = partitions(n)
    for w in all_standard_words(n):
        t = row_insert(w)
        assert run_algorithm3(w, F(w))
        for lam in shapes:
            expected = is_catabolizable(t, lam)
            assert run_algorithm3(w, lam) == expected
            assert algorithm3_trace(w, lam)[0] == expected


def test_labeled_input():
    assert F(WORKED_LABELING, labeled=True) == (3, 2, 1, 1, 1, 1)
    assert run_F(WORKED_LABELING, labeled=True)[0] == (3, 2, 1, 1, 1, 1)
    assert F(standard_word_from_labeling((1, 1, 2, 2, 0, 0, 1, 0))) == (3, 3, 1, 1)
