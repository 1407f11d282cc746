"""Partitions, words, tableaux and Schensted insertion.

Words are plain tuples of ints. Positions are 1-based wherever a position is
part of the public interface (``apply_s``), matching the usual ``w s_i``
notation. Partitions are tuples of positive ints in weakly decreasing order.
"""

from __future__ import annotations

import enum
import itertools
import json
from bisect import bisect_left
from functools import cache
from typing import Iterable, Iterator, Sequence

from catins import _accel

Word = tuple[int, ...]
Partition = tuple[int, ...]


# --------------------------------------------------------------------------
# partitions


def check_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a tuple, raising ``ValueError`` if it is not a partition."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition {parts} has a non-positive part")
        if i and p > parts[i - 1]:
            raise ValueError(f"partition {parts} is not weakly decreasing")
    return parts


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


class Dominance(enum.Enum):
    GEQ = "geq"
    LEQ = "leq"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def dominance_geq(lhs: Sequence[int], rhs: Sequence[int]) -> Dominance:
    """Compare two partitions of the same weight in dominance order.

    ``GEQ`` means ``lhs`` strictly dominates ``rhs``; ``LEQ`` the reverse.

    Raises:
        ValueError: if the weights differ.
    """
    if sum(lhs) != sum(rhs):
        raise ValueError(f"dominance undefined for {tuple(lhs)} and {tuple(rhs)}: weights differ")
    ge = le = True
    a = b = 0
    for i in range(max(len(lhs), len(rhs))):
        a += lhs[i] if i < len(lhs) else 0
        b += rhs[i] if i < len(rhs) else 0
        if a < b:
            ge = False
        elif a > b:
            le = False
    if ge and le:
        return Dominance.EQUAL
    if ge:
        return Dominance.GEQ
    if le:
        return Dominance.LEQ
    return Dominance.INCOMPARABLE


def dominates(lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    """``lhs ⊵ rhs`` (non-strict)."""
    return dominance_geq(lhs, rhs) in (Dominance.GEQ, Dominance.EQUAL)


def strictly_between(upper: Partition, lower: Partition) -> list[Partition]:
    """Partitions strictly between ``upper`` and ``lower`` in dominance order."""
    return [
        mu
        for mu in partitions(sum(upper))
        if dominance_geq(upper, mu) is Dominance.GEQ
        and dominance_geq(mu, lower) is Dominance.GEQ
    ]


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape."""
    n = sum(shape)
    conj = conjugate(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return _factorial(n) // prod


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# --------------------------------------------------------------------------
# tableaux


class Tableau:
    """A straight-shape tableau in English notation.

    Rows weakly increase to the right and columns strictly increase downward.
    Instances are immutable and hashable.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[int]], check: bool = True):
        rows = tuple(tuple(r) for r in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        if check:
            _check_rows(rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", tuple(len(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other):
        if isinstance(other, Tableau):
            return self.rows == other.rows
        return NotImplemented

    def __lt__(self, other):
        return self.rows < other.rows

    def __hash__(self):
        return hash(self.rows)

    def __len__(self):
        return sum(self.shape)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"

    def __str__(self):
        return self.grid()

    def grid(self) -> str:
        if not self.rows:
            return "∅"
        width = max(len(str(v)) for r in self.rows for v in r)
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)

    def entries(self) -> list[int]:
        return [v for r in self.rows for v in r]

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "Tableau":
        return cls(json.loads(text))

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, len(self) + 1))

    def prefix(self, m: int) -> Word:
        """Entries of the first ``m`` cells of the first row."""
        return self.rows[0][:m] if self.rows else ()


def _check_rows(rows: tuple[tuple[int, ...], ...]) -> None:
    for i, row in enumerate(rows):
        if not row:
            raise ValueError("tableau has an empty interior row")
        if i and len(row) > len(rows[i - 1]):
            raise ValueError(f"row lengths {[len(r) for r in rows]} are not a partition")
        for j in range(len(row) - 1):
            if row[j] > row[j + 1]:
                raise ValueError(f"row {i + 1} is not weakly increasing: {row}")
        if i:
            above = rows[i - 1]
            for j, v in enumerate(row):
                if above[j] >= v:
                    raise ValueError(f"column {j + 1} is not strictly increasing")


def row_insert(word: Iterable[int]) -> Tableau:
    """Schensted row insertion tableau ``P(word)``."""
    return Tableau(_accel.insertion_rows(tuple(word)), check=False)


def column_insert_one(t: Tableau, a: int) -> Tableau:
    """Column-insert ``a`` into ``t``; the result is ``P(a · rowword(t))``."""
    cols = [list(c) for c in _columns(t)]
    for col in cols:
        k = bisect_left(col, a)
        if k == len(col):
            col.append(a)
            break
        col[k], a = a, col[k]
    else:
        cols.append([a])
    return Tableau(_rows_from_columns(cols), check=False)


def _columns(t: Tableau) -> list[tuple[int, ...]]:
    if not t.rows:
        return []
    return [tuple(r[j] for r in t.rows if len(r) > j) for j in range(len(t.rows[0]))]


def _rows_from_columns(cols: list[list[int]]) -> list[list[int]]:
    height = max((len(c) for c in cols), default=0)
    return [[c[i] for c in cols if len(c) > i] for i in range(height)]


def rowword(t: Tableau) -> Word:
    """Row reading word: bottom row first, each row left to right."""
    return tuple(v for r in reversed(t.rows) for v in r)


def standardize(word: Sequence[int]) -> Word:
    """Replace entries by 1..n, ties broken left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return tuple(out)


def relabel_standard(t: Tableau) -> Tableau:
    """Order-isomorphically relabel the (distinct) entries of ``t`` to 1..|t|."""
    rank = {v: i for i, v in enumerate(sorted(t.entries()), 1)}
    return Tableau([[rank[v] for v in r] for r in t.rows], check=False)


# --------------------------------------------------------------------------
# words


def apply_s(w: Sequence[int], i: int) -> Word:
    """``w s_i``: swap the letters in positions ``i`` and ``i + 1`` (1-based)."""
    if not 1 <= i <= len(w) - 1:
        raise IndexError(f"position {i} out of range for a word of length {len(w)}")
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def knuth_moves(w: Sequence[int]) -> Iterator[tuple[int, Word]]:
    """Yield ``(i, w s_i)`` for every elementary Knuth transformation of ``w``.

    The relations are ``x z y ~ z x y`` (x <= y < z) and ``y x z ~ y z x``
    (x < y <= z) on adjacent windows.
    """
    w = tuple(w)
    for s in range(len(w) - 2):
        p, q, r = w[s], w[s + 1], w[s + 2]
        # first pair of the window
        if p <= r < q or q <= r < p:
            yield s + 1, apply_s(w, s + 1)
        # last pair of the window
        if q < p <= r or r < p <= q:
            yield s + 2, apply_s(w, s + 2)


def knuth_neighbors(w: Sequence[int]) -> set[Word]:
    return {v for _, v in knuth_moves(w)}


def is_standard_word(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_standard_word(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not is_standard_word(w):
        raise ValueError(f"{' '.join(map(str, w))} is not a permutation of 1..{len(w)}")
    return w


# --------------------------------------------------------------------------
# enumeration


def all_standard_words(n: int) -> Iterator[Word]:
    """All permutations of 1..n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def syt_of_shape(shape: Sequence[int]) -> list[Tableau]:
    """Standard tableaux of a fixed shape, in lexicographic order of rows."""
    shape = tuple(shape)
    n = sum(shape)
    out: list[Tableau] = []

    def place(rows: list[list[int]], k: int) -> None:
        if k > n:
            out.append(Tableau(rows, check=False))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(rows, k + 1)
                rows[i].pop()

    place([[] for _ in shape], 1)
    out.sort()
    return out


def all_syt(n: int) -> list[Tableau]:
    """All standard Young tableaux with ``n`` cells, sorted lexicographically by rows."""
    return sorted(t for shape in partitions(n) for t in syt_of_shape(shape))


# --------------------------------------------------------------------------
# parsing


def parse_word(text: str | Sequence[str]) -> Word:
    """Parse whitespace-separated integers; ``ValueError`` names the bad token."""
    tokens = text.split() if isinstance(text, str) else [t for s in text for t in s.split()]
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed word: token {tok!r} is not an integer") from None
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text or text in ("()", "∅"):
        return ()
    parts = []
    for tok in text.strip("()").split(","):
        tok = tok.strip()
        try:
            parts.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed partition: token {tok!r} is not an integer") from None
    return check_partition(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if p else "∅"
