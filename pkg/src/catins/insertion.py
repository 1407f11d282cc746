"""Catabolism insertion: compute catabolizability straight from a cocharge labeling.

The state is a pair ``(x, ν)`` of a labeled word and a partition. The last
label ``a`` of ``x`` is presented to ``ν``: it is inserted if ``ν + ε_{a+1}``
is a partition and otherwise comes back at the front of the word as ``a + 1``.
The partition left when the word runs out is the catabolizability of ``P(w)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from catins import _accel
from catins.catabolism import superstandard
from catins.cocharge import cocharge_label, standard_word_from_labeling
from catins.core import (
    Partition,
    Word,
    apply_s,
    check_partition,
    check_standard_word,
    column_insert_one,
    knuth_moves,
    rowword,
)

INSERTION = "insertion"
COROTATION = "corotation"
REJECT = "reject"

KNUTH = "knuth"
CATABOLISM_TRANSFORMATION = "catabolism_transformation"


class WordPartitionPair(NamedTuple):
    word: Word
    nu: Partition

    def full_word(self) -> Word:
        """``x · rowword(Z_ν)``."""
        return self.word + rowword(superstandard(self.nu))


@dataclass(frozen=True)
class Step:
    index: int
    presented: int
    kind: str
    result: WordPartitionPair


@dataclass
class Trace:
    initial: Word
    steps: list[Step] = field(default_factory=list)
    output: Partition | bool | None = None

    def pairs(self) -> list[WordPartitionPair]:
        return [WordPartitionPair(self.initial, ())] + [s.result for s in self.steps]

    def to_dict(self) -> list[dict]:
        return [
            {
                "step": s.index,
                "presented": s.presented,
                "kind": s.kind,
                "word": list(s.result.word),
                "nu": list(s.result.nu),
            }
            for s in self.steps
        ]


def _fits(nu: Partition, a: int) -> bool:
    """Whether ``ν + ε_{a+1}`` is a partition (``a`` is 0-based row index)."""
    if a == len(nu):
        return True
    return a < len(nu) and (a == 0 or nu[a - 1] > nu[a])


def _add(nu: Partition, a: int) -> Partition:
    if a == len(nu):
        return nu + (1,)
    return nu[:a] + (nu[a] + 1,) + nu[a + 1 :]


def step_f(p: WordPartitionPair, index: int = 1) -> tuple[WordPartitionPair, Step]:
    if not p.word:
        raise ValueError("cannot step a pair with an empty word")
    y, a = p.word[:-1], p.word[-1]
    if _fits(p.nu, a):
        new = WordPartitionPair(y, _add(p.nu, a))
        return new, Step(index, a, INSERTION, new)
    new = WordPartitionPair((a + 1,) + y, p.nu)
    return new, Step(index, a, COROTATION, new)


def step_f_lambda(
    p: WordPartitionPair, shape: Sequence[int], index: int = 1
) -> tuple[WordPartitionPair, Step]:
    """Bounded step; a ``REJECT`` step leaves the pair unchanged."""
    if not p.word:
        raise ValueError("cannot step a pair with an empty word")
    y, a = p.word[:-1], p.word[-1]
    if a >= len(shape):
        return p, Step(index, a, REJECT, p)
    current = p.nu[a] if a < len(p.nu) else 0
    if _fits(p.nu, a) and current + 1 <= shape[a]:
        new = WordPartitionPair(y, _add(p.nu, a))
        return new, Step(index, a, INSERTION, new)
    new = WordPartitionPair((a + 1,) + y, p.nu)
    return new, Step(index, a, COROTATION, new)


def _initial(w: Sequence[int], labeled: bool) -> Word:
    if labeled:
        z = tuple(w)
        standard_word_from_labeling(z)  # validates
        return z
    return cocharge_label(w)


def step_bound(n: int) -> int:
    return n + n * (n - 1) // 2


def run_F(w: Sequence[int], labeled: bool = False) -> tuple[Partition, Trace]:
    """Run the insertion algorithm step by step, recording the trace.

    Pass ``labeled=True`` when ``w`` is already a cocharge labeling.
    """
    z = _initial(w, labeled)
    trace = Trace(z)
    pair = WordPartitionPair(z, ())
    limit = step_bound(len(z))
    while pair.word:
        if len(trace.steps) >= limit:
            raise RuntimeError(f"no termination within {limit} steps on {z}")
        pair, step = step_f(pair, len(trace.steps) + 1)
        trace.steps.append(step)
    trace.output = pair.nu
    return pair.nu, trace


def F(w: Sequence[int], labeled: bool = False) -> Partition:
    """Output partition of the insertion algorithm (no trace, compiled kernel)."""
    if labeled:
        return _accel.catabolism_F(tuple(w))
    return _accel.catabolism_F(_accel.cocharge_label(check_standard_word(w)))


def ctype(w: Sequence[int], labeled: bool = False) -> Partition:
    """Catabolizability of ``P(w)``."""
    return F(w, labeled)


def algorithm3_trace(
    w: Sequence[int], shape: Sequence[int], labeled: bool = False
) -> tuple[bool, Trace]:
    shape = check_partition(shape)
    z = _initial(w, labeled)
    if sum(shape) != len(z):
        raise ValueError(f"weight of {shape} does not match the word length {len(z)}")
    trace = Trace(z)
    pair = WordPartitionPair(z, ())
    limit = step_bound(len(z))
    while pair.word:
        if len(trace.steps) >= limit:
            raise RuntimeError(f"no termination within {limit} steps on {z}")
        pair, step = step_f_lambda(pair, shape, len(trace.steps) + 1)
        trace.steps.append(step)
        if step.kind == REJECT:
            trace.output = False
            return False, trace
    trace.output = True
    return True, trace


def run_algorithm3(w: Sequence[int], shape: Sequence[int], labeled: bool = False) -> bool:
    """True iff ``P(w)`` is ``shape``-catabolizable, via the bounded insertion."""
    shape = check_partition(shape)
    z = tuple(w) if labeled else _accel.cocharge_label(check_standard_word(w))
    if sum(shape) != len(z):
        raise ValueError(f"weight of {shape} does not match the word length {len(z)}")
    return _accel.catabolism_F_bounded(z, shape)


# --------------------------------------------------------------------------
# elementary moves on labelings


def is_catabolism_transformation(z: Sequence[int], i: int) -> bool:
    if not 1 <= i <= len(z) - 1:
        raise IndexError(f"position {i} out of range for a word of length {len(z)}")
    return abs(z[i - 1] - z[i]) > 1


def is_ascent(z: Sequence[int], i: int) -> bool:
    """Cocharge-preserving swap at ``i`` with ``z_i > z_{i+1}``."""
    if not 1 <= i <= len(z) - 1:
        raise IndexError(f"position {i} out of range for a word of length {len(z)}")
    w = standard_word_from_labeling(z)
    return abs(w[i - 1] - w[i]) != 1 and z[i - 1] > z[i]


@dataclass(frozen=True)
class Move:
    kind: str
    position: int | None
    before: Word
    after: Word


def _knuth_path(source: Word, target: Word) -> list[tuple[int, Word]]:
    """Shortest Knuth-move path from ``source`` to ``target`` (BFS)."""
    if source == target:
        return []
    parent: dict[Word, tuple[Word, int] | None] = {source: None}
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        for i, nxt in knuth_moves(cur):
            if nxt in parent:
                continue
            parent[nxt] = (cur, i)
            if nxt == target:
                path = []
                node = nxt
                while parent[node] is not None:
                    prev, pos = parent[node]
                    path.append((pos, node))
                    node = prev
                return path[::-1]
            queue.append(nxt)
    raise ValueError(f"{target} is not Knuth equivalent to {source}")


def expand_step(p: WordPartitionPair) -> list[Move]:
    """Realize one step as elementary moves on the full word ``x · rowword(Z_ν)``.

    Knuth moves column-insert the presented label into ``Z_ν``; in the
    corotation case catabolism transformations then carry it to the end of the
    word and a corotation brings it to the front.
    """
    if not p.word:
        raise ValueError("cannot expand a pair with an empty word")
    y, a = p.word[:-1], p.word[-1]
    z_nu = superstandard(p.nu)
    t = column_insert_one(z_nu, a)
    moves: list[Move] = []
    offset = len(y)

    current = y + (a,) + rowword(z_nu)
    for pos, tail in _knuth_path((a,) + rowword(z_nu), rowword(t)):
        nxt = y + tail
        moves.append(Move(KNUTH, pos + offset, current, nxt))
        current = nxt
    if _fits(p.nu, a):
        return moves

    grown = next(i for i, (r, s) in enumerate(zip(t.shape, p.nu + (0,))) if r != s)
    k = offset + sum(t.shape[grown + 1 :]) + t.shape[grown] - 1
    while k < len(current) - 1:
        nxt = apply_s(current, k + 1)
        moves.append(Move(CATABOLISM_TRANSFORMATION, k + 1, current, nxt))
        current = nxt
        k += 1
    nxt = (current[-1] + 1,) + current[:-1]
    moves.append(Move(COROTATION, None, current, nxt))
    return moves
