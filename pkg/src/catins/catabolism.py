"""Superstandard tableaux, slicing, catabolism and definitional catabolizability.

Everything here works straight from the definitions with Schensted insertion;
it is the independent oracle for the insertion algorithm in
:mod:`catins.insertion`.
"""

from __future__ import annotations

from typing import Sequence

from catins.core import (
    Partition,
    Tableau,
    Word,
    check_partition,
    dominates,
    partitions,
    relabel_standard,
    row_insert,
)

ROW = "row"
COLUMN = "column"


def superstandard(shape: Sequence[int]) -> Tableau:
    """``Z_λ``: row ``i`` filled with ``i - 1``."""
    shape = check_partition(shape)
    return Tableau([[i] * part for i, part in enumerate(shape)], check=False)


def superstandard_syt(shape: Sequence[int]) -> Tableau:
    """``Z*_λ``, the standard tableau whose cocharge labeling is ``Z_λ``.

    Since a standard word is the standardization of its labeling, this is
    the standardization of ``Z_λ``: rows filled consecutively with 1..n.
    """
    shape = check_partition(shape)
    rows = []
    start = 1
    for part in shape:
        rows.append(range(start, start + part))
        start += part
    return Tableau(rows, check=False)


def _skew_rows(t: Tableau, inner: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """Rows of ``t / inner`` as ``(first column, entries)`` pairs."""
    inner = tuple(inner)
    if len(inner) > len(t.rows) or any(p > len(r) for p, r in zip(inner, t.rows)):
        raise ValueError(f"{inner} is not contained in the shape {t.shape}")
    out = []
    for i, row in enumerate(t.rows):
        off = inner[i] if i < len(inner) else 0
        out.append((off, row[off:]))
    return out


def _reading(rows: list[tuple[int, ...]]) -> Word:
    return tuple(v for r in reversed(rows) for v in r)


def h_slice(t: Tableau, r: int, inner: Sequence[int] = ()) -> Tableau:
    """``H_r``: insert the north piece's reading word followed by the south piece's.

    The skew tableau is ``t / inner``; the cut lies between rows ``r`` and ``r + 1``.
    """
    rows = [entries for _, entries in _skew_rows(t, inner)]
    return row_insert(_reading(rows[:r]) + _reading(rows[r:]))


def v_slice(t: Tableau, c: int, inner: Sequence[int] = ()) -> Tableau:
    """``V_c``: insert the east piece's reading word followed by the west piece's.

    The skew tableau is ``t / inner``; the cut lies between columns ``c`` and ``c + 1``.
    """
    east, west = [], []
    for off, entries in _skew_rows(t, inner):
        split = max(0, c - off)
        west.append(entries[:split])
        east.append(entries[split:])
    return row_insert(_reading(east) + _reading(west))


def _check_prefix(t: Tableau, m: int) -> None:
    if m < 0 or (m and (not t.rows or m > len(t.rows[0]))):
        raise ValueError(f"({m}) is not contained in the shape {t.shape}")


def cat(t: Tableau, m: int) -> Tableau:
    """``Cat_m(T) = H_1(T - T_(m))``."""
    _check_prefix(t, m)
    return h_slice(t, 1, (m,) if m else ())


def ccat(t: Tableau, m: int) -> Tableau:
    """``CCat_m(T) = V_m(T - T_(m))``."""
    _check_prefix(t, m)
    return v_slice(t, m, (m,) if m else ())


def _operator(mode: str):
    if mode == ROW:
        return cat
    if mode == COLUMN:
        return ccat
    raise ValueError(f"mode must be {ROW!r} or {COLUMN!r}, not {mode!r}")


def is_catabolizable(t: Tableau, shape: Sequence[int], mode: str = ROW) -> bool:
    """Whether the standard tableau ``t`` is ``shape``-(column) catabolizable.

    After each catabolism the remaining entries are relabeled to 1..k, so the
    "smallest entries" test is always against 1..λ_1.
    """
    shape = check_partition(shape)
    if sum(shape) != len(t):
        raise ValueError(f"weight of {shape} does not match |T| = {len(t)}")
    step = _operator(mode)
    while shape:
        m = shape[0]
        if t.prefix(m) != tuple(range(1, m + 1)):
            return False
        t = relabel_standard(step(t, m))
        shape = shape[1:]
    return True


def greedy_prefix(t: Tableau) -> int:
    """Largest ``m`` with ``T_(m) = Z*_(m)`` for a standard ``t``."""
    if not t.rows:
        return 0
    m = 0
    for v in t.rows[0]:
        if v != m + 1:
            break
        m += 1
    return m


def ctype_greedy(t: Tableau, mode: str = ROW) -> Partition:
    """Catabolizability by greedy catabolism (row or column)."""
    step = _operator(mode)
    parts = []
    while len(t):
        m = greedy_prefix(t)
        parts.append(m)
        t = relabel_standard(step(t, m))
    return tuple(parts)


def catabolism_sequence(t: Tableau, mode: str = ROW) -> list[tuple[int, Tableau]]:
    """The greedy run as ``(m, tableau before catabolism)`` pairs."""
    step = _operator(mode)
    out = []
    while len(t):
        m = greedy_prefix(t)
        out.append((m, t))
        t = relabel_standard(step(t, m))
    return out


def catabolizable_set(t: Tableau) -> set[Partition]:
    return {lam for lam in partitions(len(t)) if is_catabolizable(t, lam, ROW)}


def dominance_maxima(shapes: set[Partition]) -> list[Partition]:
    return sorted(
        (lam for lam in shapes if not any(mu != lam and dominates(mu, lam) for mu in shapes)),
        reverse=True,
    )
