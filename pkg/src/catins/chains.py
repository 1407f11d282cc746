"""Chains of the affine labeling and the maximum statistic ``I_k``.

The labeling ``z`` of a standard word extends to all indices ``i <= n`` by
``w̃(i - n) = w̃(i) + 1``. A chain reads values ``k', ..., 1, 0`` left to right
at pairwise distinct residues mod ``n``. A ``k``-bounded family uses chains of
length at most ``k`` whose residue sets are disjoint, so its size is the sum of
the chain lengths and depends only on which residue sets are used. ``I_k`` is
therefore an exact set-packing problem over the ``2^n`` residue subsets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from catins.core import Partition, Word

Chain = tuple[int, ...]


@dataclass(frozen=True)
class ChainFamily:
    chains: tuple[Chain, ...]
    bound: int

    @property
    def size(self) -> int:
        return len(self.support())

    def support(self) -> set[int]:
        return {j for c in self.chains for j in c}

    def lengths(self) -> Partition:
        return tuple(sorted((len(c) for c in self.chains), reverse=True))


def wtilde(z: Sequence[int], i: int) -> int:
    n = len(z)
    if i > n:
        raise ValueError(f"index {i} exceeds the word length {n}")
    k = (n - i) // n
    return z[i + k * n - 1] + k


def residue(i: int, n: int) -> int:
    """Residue class of ``i`` as 0..n-1 (position ``n`` maps to 0)."""
    return i % n


def is_chain(z: Sequence[int], j: Sequence[int]) -> bool:
    n = len(z)
    if not j or any(x > n for x in j):
        return False
    if any(j[t] >= j[t + 1] for t in range(len(j) - 1)):
        return False
    top = len(j) - 1
    if any(wtilde(z, x) != top - t for t, x in enumerate(j)):
        return False
    return len({residue(x, n) for x in j}) == len(j)


def is_family(z: Sequence[int], family: ChainFamily) -> bool:
    n = len(z)
    seen: set[int] = set()
    for c in family.chains:
        if len(c) > family.bound or not is_chain(z, c):
            return False
        res = {residue(x, n) for x in c}
        if res & seen:
            return False
        seen |= res
    return True


def _index_of_value(z: Sequence[int], r: int, value: int) -> int | None:
    """The unique index with residue ``r`` and ``w̃ = value``, if any."""
    n = len(z)
    base = r if r else n
    shift = value - z[base - 1]
    if shift < 0:
        return None
    return base - shift * n


def iter_chains(z: Sequence[int], max_length: int) -> Iterator[Chain]:
    """All chains of length at most ``max_length``, as increasing index tuples.

    Indices are confined to ``(n - max_length*n, n]``; further left every
    value is at least ``max_length``.
    """
    n = len(z)

    def extend(chain: list[int], used: int) -> Iterator[Chain]:
        yield tuple(reversed(chain))
        if len(chain) == max_length:
            return
        value = len(chain)
        for r in range(n):
            if used >> r & 1:
                continue
            j = _index_of_value(z, r, value)
            if j is not None and j < chain[-1]:
                yield from extend(chain + [j], used | 1 << r)

    for j0 in range(1, n + 1):
        if z[j0 - 1] == 0:
            yield from extend([j0], 1 << residue(j0, n))


def _mask(chain: Chain, n: int) -> int:
    m = 0
    for j in chain:
        m |= 1 << residue(j, n)
    return m


def _chains_by_mask(z: Sequence[int], k: int) -> dict[int, Chain]:
    n = len(z)
    best: dict[int, Chain] = {}
    for c in iter_chains(z, k):
        m = _mask(c, n)
        if m not in best or sorted(c) < sorted(best[m]):
            best[m] = c
    return best


def _family_key(chains: Sequence[Chain]) -> tuple:
    return tuple(sorted(tuple(sorted(c)) for c in chains))


def max_family(z: Sequence[int], k: int) -> tuple[int, ChainFamily]:
    """``I_k`` and a maximizing ``k``-bounded chain family.

    Among maximum families the one with the lexicographically least sorted
    list of index sets found by the recursion is returned.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    z = tuple(z)
    n = len(z)
    if n == 0:
        return 0, ChainFamily((), k)
    by_mask = _chains_by_mask(z, k)
    masks = sorted(by_mask)

    @lru_cache(maxsize=None)
    def solve(free: int) -> tuple[int, tuple[Chain, ...]]:
        if not free:
            return 0, ()
        low = free & -free
        size, fam = solve(free & ~low)
        best = (size, fam)
        for m in masks:
            if m & low and m & free == m:
                sub_size, sub_fam = solve(free & ~m)
                cand = (sub_size + bin(m).count("1"), sub_fam + (by_mask[m],))
                if cand[0] > best[0] or (
                    cand[0] == best[0] and _family_key(cand[1]) < _family_key(best[1])
                ):
                    best = cand
        return best

    size, fam = solve((1 << n) - 1)
    return size, ChainFamily(tuple(sorted(fam, key=sorted)), k)


def greene_profile(z: Sequence[int]) -> list[int]:
    """``[I_1, ..., I_n]``."""
    return [max_family(z, k)[0] for k in range(1, len(z) + 1)]


def family_with_lengths(z: Sequence[int], target: Sequence[int]) -> ChainFamily | None:
    """A chain family whose chain lengths are exactly the parts of ``target``.

    The bound of the family is the largest part; ``None`` if no such family
    exists.
    """
    z = tuple(z)
    n = len(z)
    target = tuple(sorted(target, reverse=True))
    if not target:
        return ChainFamily((), 0)
    bound = target[0]
    by_len: dict[int, list[tuple[int, Chain]]] = {}
    for m, c in sorted(_chains_by_mask(z, bound).items()):
        by_len.setdefault(len(c), []).append((m, c))
    spare = n - sum(target)
    if spare < 0:
        return None

    @lru_cache(maxsize=None)
    def solve(free: int, need: tuple[int, ...], skips: int) -> tuple[Chain, ...] | None:
        if not need:
            return ()
        if not free:
            return None
        low = free & -free
        counts = Counter(need)
        for length in sorted(counts, reverse=True):
            rest = list(need)
            rest.remove(length)
            for m, c in by_len.get(length, ()):
                if m & low and m & free == m:
                    sub = solve(free & ~m, tuple(rest), skips)
                    if sub is not None:
                        return (c,) + sub
        if skips:
            return solve(free & ~low, need, skips - 1)
        return None

    found = solve((1 << n) - 1, target, spare)
    if found is None:
        return None
    return ChainFamily(tuple(sorted(found, key=sorted)), bound)


def s_d_index(j: int, d: int, n: int) -> int:
    """Affine simple reflection: swap ``d + kn`` and ``d + 1 + kn``."""
    if (j - d) % n == 0:
        return j + 1
    if (j - d - 1) % n == 0:
        return j - 1
    return j


def s_d_chain(chain: Chain, d: int, n: int) -> Word:
    return tuple(s_d_index(j, d, n) for j in chain)
