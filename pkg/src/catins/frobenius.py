"""Coefficient tables of the graded Frobenius series of Garsia-Procesi modules.

For a partition λ the series is the sum of ``t^cocharge(T) s_sh(T)`` over
standard tableaux ``T`` with ``ctype(T) ⊵ λ``. Schur functions stay formal:
the table maps a shape to its coefficients by degree.
"""

from __future__ import annotations

import json
from typing import Sequence

from catins.catabolism import ctype_greedy, superstandard_syt
from catins.cocharge import tableau_cocharge
from catins.core import Partition, Tableau, all_syt, check_partition, dominates, format_partition


def frobenius_table(shape: Sequence[int]) -> dict[Partition, list[int]]:
    lam = check_partition(shape)
    n = sum(lam)
    top = n * (n - 1) // 2
    table: dict[Partition, list[int]] = {}
    for t in all_syt(n):
        if dominates(ctype_greedy(t), lam):
            table.setdefault(t.shape, [0] * (top + 1))[tableau_cocharge(t)] += 1
    for coeffs in table.values():
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    return dict(sorted(table.items(), reverse=True))


def minimal_degree(shape: Sequence[int]) -> int:
    """``Σ λ_i (i - 1)``."""
    return sum(i * part for i, part in enumerate(shape))


def garnir_tableau(shape: Sequence[int]) -> Tableau:
    """The unique minimal-cocharge standard tableau of the shape."""
    return superstandard_syt(shape)


def format_table(table: dict[Partition, list[int]]) -> str:
    width = max((len(format_partition(s)) for s in table), default=5)
    lines = [f"{'shape'.ljust(width)}  coefficients by degree t^0, t^1, ..."]
    for s, coeffs in table.items():
        lines.append(f"{format_partition(s).ljust(width)}  {' '.join(map(str, coeffs))}")
    return "\n".join(lines)


def table_json(shape: Sequence[int], table: dict[Partition, list[int]]) -> str:
    return json.dumps(
        {"input": list(shape), "result": [{"shape": list(s), "coefficients": c} for s, c in table.items()]}
    )
