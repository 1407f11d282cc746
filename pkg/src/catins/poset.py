"""The cocyclage poset on standard tableaux of size n."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field

from catins.catabolism import ctype_greedy
from catins.cocharge import cocharge_label, tableau_cocharge
from catins.core import Tableau, all_standard_words, all_syt, format_partition, partitions, row_insert


@dataclass(frozen=True, order=True)
class CocyclageEdge:
    source: Tableau
    target: Tableau
    zero: bool


def edge_flags(n: int) -> dict[tuple[Tableau, Tableau], set[bool]]:
    """Every ``P(u) -> P(corotation of u)`` over all standard words ``u``,
    with the set of zero flags seen across inducing words."""
    flags: dict[tuple[Tableau, Tableau], set[bool]] = defaultdict(set)
    for u in all_standard_words(n):
        if u[-1] == 1:
            continue
        v = (u[-1],) + u[:-1]
        zero = cocharge_label(u)[-1] == 0
        flags[row_insert(u), row_insert(v)].add(zero)
    return dict(flags)


def cocyclage_edges(n: int) -> list[CocyclageEdge]:
    """Deduplicated edges, sorted. Raises if some edge has inconsistent zero flags."""
    out = []
    for (s, t), seen in edge_flags(n).items():
        if len(seen) != 1:
            raise ValueError(f"edge {s!r} -> {t!r} is induced by both zero and non-zero corotations")
        out.append(CocyclageEdge(s, t, next(iter(seen))))
    return sorted(out)


@dataclass
class GradedReport:
    n: int
    ok: bool = True
    nodes: int = 0
    edges: int = 0
    rank_range: tuple[int, int] = (0, 0)
    minima: list[Tableau] = field(default_factory=list)
    maxima: list[Tableau] = field(default_factory=list)
    connected: bool = True
    bad_edges: list[tuple[CocyclageEdge, int]] = field(default_factory=list)


def verify_graded(n: int) -> GradedReport:
    """Check that cocharge is a rank function of the cyclage poset.

    Every generating edge must change cocharge by exactly one; then the edges
    are exactly the covering relations. Edges that fail are reported, not
    raised.
    """
    report = GradedReport(n)
    nodes = all_syt(n)
    rank = {t: tableau_cocharge(t) for t in nodes}
    edges = cocyclage_edges(n)
    report.nodes, report.edges = len(nodes), len(edges)
    for e in edges:
        delta = rank[e.target] - rank[e.source]
        if delta != 1:
            report.bad_edges.append((e, delta))
    lo, hi = min(rank.values()), max(rank.values())
    report.rank_range = (lo, hi)
    report.minima = [t for t in nodes if rank[t] == lo]
    report.maxima = [t for t in nodes if rank[t] == hi]

    adj: dict[Tableau, set[Tableau]] = defaultdict(set)
    for e in edges:
        adj[e.source].add(e.target)
        adj[e.target].add(e.source)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for nxt in adj[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    report.connected = len(seen) == len(nodes)
    report.ok = (
        not report.bad_edges
        and report.connected
        and report.rank_range == (0, n * (n - 1) // 2)
        and len(report.minima) == 1
        and len(report.maxima) == 1
    )
    return report


_PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf",
    "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f",
    "#e5c494",
]


def _node_label(t: Tableau, cc: int) -> str:
    rows = "\\n".join(" ".join(map(str, r)) for r in t.rows)
    return f"{rows}\\ncc={cc}"


def export_dot(n: int, overlay: str | None = None) -> str:
    """DOT digraph of the cocyclage poset; zero edges are dashed.

    ``overlay="ctype"`` colors nodes by catabolizability.
    """
    if overlay not in (None, "none", "ctype"):
        raise ValueError(f"unknown overlay {overlay!r}")
    nodes = sorted(all_syt(n), key=lambda t: (tableau_cocharge(t), t.rows))
    ids = {t: f"t{i}" for i, t in enumerate(nodes)}
    colors = {lam: _PALETTE[i % len(_PALETTE)] for i, lam in enumerate(partitions(n))}
    lines = [f'digraph cocyclage_{n} {{', "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    by_rank: dict[int, list[str]] = defaultdict(list)
    for t in nodes:
        cc = tableau_cocharge(t)
        by_rank[cc].append(ids[t])
        attrs = f'label="{_node_label(t, cc)}"'
        if overlay == "ctype":
            lam = ctype_greedy(t)
            attrs += f', style=filled, fillcolor="{colors[lam]}", ctype="{format_partition(lam)}"'
        lines.append(f"  {ids[t]} [{attrs}];")
    for cc in sorted(by_rank):
        lines.append(f"  {{rank=same; {'; '.join(by_rank[cc])};}}")
    for e in cocyclage_edges(n):
        style = " [style=dashed]" if e.zero else ""
        lines.append(f"  {ids[e.source]} -> {ids[e.target]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(n: int) -> str:
    """Edge list: ``{"nodes": [...], "edges": [{source, target, zero}]}``."""
    nodes = sorted(all_syt(n), key=lambda t: (tableau_cocharge(t), t.rows))
    index = {t: i for i, t in enumerate(nodes)}
    data = {
        "n": n,
        "nodes": [
            {"id": index[t], "rows": [list(r) for r in t.rows], "cocharge": tableau_cocharge(t)}
            for t in nodes
        ],
        "edges": [
            {"source": index[e.source], "target": index[e.target], "zero": e.zero}
            for e in cocyclage_edges(n)
        ],
    }
    return json.dumps(data, indent=2)
