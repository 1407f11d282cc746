"""Cocharge labelings, (co)rotations and cocharge-preserving swaps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from catins import _accel
from catins.core import Tableau, Word, check_standard_word, row_insert, rowword

ROTATION = "rotation"
COROTATION = "corotation"


@dataclass(frozen=True)
class RotationKind:
    direction: str
    zero: bool


class InvalidLabeling(ValueError):
    pass


def cocharge_label(w: Sequence[int]) -> Word:
    """Cocharge labeling of a standard word.

    The letter 1 is labeled 0; the letter ``i + 1`` gets the label of ``i``,
    plus one if it sits to the left of ``i``.
    """
    return _accel.cocharge_label(check_standard_word(w))


def is_valid_cocharge_labeling(z: Sequence[int]) -> bool:
    if not z:
        return True
    if min(z) < 0:
        return False
    top = max(z)
    first = {}
    last = {}
    for pos, lab in enumerate(z):
        first.setdefault(lab, pos)
        last[lab] = pos
    if len(first) != top + 1:
        return False
    # the first letter labeled i must come right after the last labeled i-1
    return all(first[i] < last[i - 1] for i in range(1, top + 1))


def standard_word_from_labeling(z: Sequence[int]) -> Word:
    """Invert :func:`cocharge_label`.

    Letters with equal labels increase left to right and smaller labels carry
    smaller letters, so the word is the standardization of ``z``.
    """
    z = tuple(z)
    if not is_valid_cocharge_labeling(z):
        raise InvalidLabeling(f"{' '.join(map(str, z))} is not a cocharge labeling")
    order = sorted(range(len(z)), key=lambda i: (z[i], i))
    out = [0] * len(z)
    for letter, pos in enumerate(order, 1):
        out[pos] = letter
    return tuple(out)


def cocharge(w: Sequence[int], labeled: bool = False) -> int:
    """Sum of the cocharge labels; pass ``labeled=True`` for a labeling."""
    if labeled:
        if not is_valid_cocharge_labeling(w):
            raise InvalidLabeling(f"{' '.join(map(str, w))} is not a cocharge labeling")
        return sum(w)
    return sum(cocharge_label(w))


def _moved_letter_is_one(z: Sequence[int], pos: int) -> bool:
    # the letter 1 is the leftmost 0 of a labeling
    return z[pos] == 0 and 0 not in z[:pos]


def corotate(w: Sequence[int]) -> Word:
    """``w a -> a w`` on a standard word.

    Raises:
        ValueError: if the word is empty or its last letter is 1.
    """
    w = check_standard_word(w)
    if not w or w[-1] == 1:
        raise ValueError("corotation must move a letter other than 1")
    return (w[-1],) + w[:-1]


def rotate(w: Sequence[int]) -> Word:
    """``a w -> w a`` on a standard word; the inverse of :func:`corotate`."""
    w = check_standard_word(w)
    if not w or w[0] == 1:
        raise ValueError("rotation must move a letter other than 1")
    return w[1:] + (w[0],)


def corotate_labeling(z: Sequence[int]) -> Word:
    """Corotation on a cocharge labeling: ``y a -> (a+1) y``."""
    z = tuple(z)
    if not z or _moved_letter_is_one(z, len(z) - 1):
        raise ValueError("corotation must move a letter other than 1")
    return (z[-1] + 1,) + z[:-1]


def rotate_labeling(z: Sequence[int]) -> Word:
    """Rotation on a cocharge labeling: ``(a+1) y -> y a``."""
    z = tuple(z)
    if not z or z[0] == 0:
        raise ValueError("rotation must move a letter other than 1")
    return z[1:] + (z[0] - 1,)


def classify_corotation(w: Sequence[int]) -> RotationKind:
    """Kind of the corotation ``w a -> a w``; zero iff ``a`` is labeled 0 in ``w``."""
    return RotationKind(COROTATION, cocharge_label(w)[-1] == 0)


def classify_rotation(w: Sequence[int]) -> RotationKind:
    """Kind of the rotation ``a w -> w a``; judged from the labeling of the result."""
    return RotationKind(ROTATION, cocharge_label(rotate(w))[-1] == 0)


def is_cocharge_preserving(w: Sequence[int], i: int) -> bool:
    if not 1 <= i <= len(w) - 1:
        raise IndexError(f"position {i} out of range for a word of length {len(w)}")
    return abs(w[i - 1] - w[i]) != 1


def labeled_tableau(t: Tableau) -> Tableau:
    """``cl(T) = P(cl(rowword(T)))`` for a standard tableau."""
    return row_insert(cocharge_label(rowword(t)))


def tableau_cocharge(t: Tableau) -> int:
    return sum(labeled_tableau(t).entries())
