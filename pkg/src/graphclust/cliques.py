"""Maximal cliques by Bron-Kerbosch over bit-rows, plus the per-order summaries."""

from __future__ import annotations

import statistics
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ResourceLimitError
from .graph import Graph, iter_bits

DEFAULT_MAX_CLIQUES = 10**6


@dataclass(frozen=True)
class DegreeStats:
    mean: Fraction
    median: Fraction
    min: int
    max: int

    @classmethod
    def of(cls, degrees: list[int]) -> DegreeStats:
        return cls(
            mean=Fraction(sum(degrees), len(degrees)),
            median=Fraction(statistics.median(Fraction(d) for d in degrees)),
            min=min(degrees),
            max=max(degrees),
        )

    def to_dict(self) -> dict:
        return {"mean": float(self.mean), "median": float(self.median), "min": self.min, "max": self.max}


@dataclass(frozen=True)
class CliqueReport:
    maximal_cliques: tuple[tuple[int, ...], ...]
    clique_number: int
    size_histogram: dict[int, int]
    degree_stats_per_order: dict[int, DegreeStats] = field(default_factory=dict)
    global_degree_mean: Fraction | None = None
    global_degree_median: Fraction | None = None


def _bron_kerbosch(rows, pivot: bool, cap: int) -> list[int]:
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                if len(found) >= cap:
                    raise ResourceLimitError(f"more than {cap} maximal cliques")
                found.append(r)
            return
        if pivot:
            # Tomita: the vertex of P | X covering most of P leaves the fewest branches
            u = max(iter_bits(p | x), key=lambda v: (p & rows[v]).bit_count())
            candidates = p & ~rows[u]
        else:
            candidates = p
        for v in iter_bits(candidates):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    n = len(rows)
    if n:
        expand(0, (1 << n) - 1, 0)
    return found


def maximal_cliques(g: Graph, pivot: bool = True, max_cliques: int = DEFAULT_MAX_CLIQUES) -> CliqueReport:
    """All maximal cliques, members sorted and cliques sorted lexicographically.

    Isolated nodes come out as singleton cliques. Raises
    :class:`ResourceLimitError` once more than ``max_cliques`` are found.
    """
    masks = _bron_kerbosch(g.rows, pivot, max_cliques)
    cliques = tuple(sorted(tuple(iter_bits(mask)) for mask in masks))
    hist = Counter(len(c) for c in cliques)
    report = CliqueReport(
        maximal_cliques=cliques,
        clique_number=max(hist, default=0),
        size_histogram=dict(sorted(hist.items())),
    )
    if g.n == 0:
        return report
    degrees = list(g.degrees)
    return CliqueReport(
        maximal_cliques=report.maximal_cliques,
        clique_number=report.clique_number,
        size_histogram=report.size_histogram,
        degree_stats_per_order=clique_degree_stats(g, report),
        global_degree_mean=Fraction(sum(degrees), len(degrees)),
        global_degree_median=Fraction(statistics.median(Fraction(d) for d in degrees)),
    )


def clique_size_distribution(report: CliqueReport) -> dict[int, int]:
    return dict(report.size_histogram)


def clique_degree_stats(g: Graph, report: CliqueReport) -> dict[int, DegreeStats]:
    """Degree summary of the distinct nodes lying in maximal k-cliques, per k."""
    members: dict[int, set[int]] = {}
    for c in report.maximal_cliques:
        members.setdefault(len(c), set()).update(c)
    return {
        k: DegreeStats.of([g.degrees[i] for i in sorted(nodes)])
        for k, nodes in sorted(members.items())
    }
