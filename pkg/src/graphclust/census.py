"""Analytic nested-subgraph counts for the trees and cliques on 3, 4 and 5 nodes.

Counts are *nested*: every edge subset isomorphic to the motif counts once,
so a single K4 holds 12 four-paths and 4 triangles. Motifs are named by
their canonical id ``M{a}_{b}`` (see :mod:`graphclust.oracle`).

Every quantity comes from degrees, the walk counts in
:class:`~graphclust.graph.WalkStats`, and triangle traces of neighbourhood
subgraphs; nothing here enumerates node subsets.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from math import comb

import numpy as np

from .errors import CountOverflowError
from .graph import (
    DENSE_MAX_NODES,
    Graph,
    WalkStats,
    adjacency_matrix,
    checked,
    dense_walk_stats,
    iter_bits,
    walk_stats,
)

MOTIF_KEYS = (
    "M3_3", "M7_3",
    "M11_4", "M13_4", "M15_4", "M63_4",
    "M75_5", "M77_5", "M86_5", "M1023_5",
)

_TIER_FIELDS = {
    3: ("m3_3", "m7_3"),
    4: ("m11_4", "m13_4", "m15_4", "m63_4"),
    5: ("m75_5", "m77_5", "m86_5", "m1023_5"),
}


@dataclass(frozen=True)
class MotifCounts:
    m3_3: int = 0      # connected triple (3-star)
    m7_3: int = 0      # triangle
    m11_4: int = 0     # 4-star
    m13_4: int = 0     # 4-path
    m15_4: int = 0     # tadpole
    m63_4: int = 0     # 4-clique
    m75_5: int = 0     # 5-star
    m77_5: int = 0     # 5-arrow
    m86_5: int = 0     # 5-path
    m1023_5: int = 0   # 5-clique
    tiers: tuple[int, ...] = ()

    def to_dict(self) -> dict[str, int | None]:
        """Flat ``{"M3_3": ..., "M1023_5": ...}``; tiers not computed map to None."""
        out: dict[str, int | None] = {}
        for key, f in zip(MOTIF_KEYS, fields(self)):
            tier = int(key.rsplit("_", 1)[1])
            out[key] = getattr(self, f.name) if tier in self.tiers else None
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(MOTIF_KEYS)
        writer.writerow(["" if v is None else v for v in self.to_dict().values()])
        return buf.getvalue()

    def tier(self, b: int) -> dict[str, int]:
        return {name: getattr(self, name) for name in _TIER_FIELDS[b]}


def _trace_cube(rows: tuple[int, ...], mask: int) -> int:
    """``tr(h^3)`` for the subgraph ``h`` induced on the nodes in ``mask``."""
    total = 0
    for j in iter_bits(mask):
        nj = rows[j] & mask
        for k in iter_bits(nj >> (j + 1)):
            total += (nj & rows[j + 1 + k]).bit_count()
    # each triangle is hit once per edge (3) and tr counts 6 closed walks
    return 2 * total


def _neighbourhood_traces(g: Graph, a: np.ndarray | None) -> int:
    """``sum_i tr(g_{-i}^3)`` with ``g_{-i}`` induced on the neighbourhood of i."""
    if a is None:
        return sum(_trace_cube(g.rows, row) for row in g.rows)
    total = 0
    for i in range(g.n):
        idx = np.flatnonzero(a[i])
        if idx.size < 3:
            continue
        b = a[np.ix_(idx, idx)]
        total += int(round(float((b * (b @ b)).sum())))
    return total


def _second_neighbourhood_traces(g: Graph, a: np.ndarray | None) -> int:
    """``sum_i sum_{j in N(i)} tr(((g_{-i})_{-j})^3)``.

    ``(g_{-i})_{-j}`` is induced on the neighbours of j inside g_{-i}, i.e. on
    the common neighbours of i and j.
    """
    rows = g.rows
    if a is None:
        return sum(_trace_cube(rows, row & rows[j]) for row in rows for j in iter_bits(row))
    total = 0
    for i in range(g.n):
        idx = np.flatnonzero(a[i])
        if idx.size < 4:
            continue
        b = a[np.ix_(idx, idx)]
        # slice j restricts b to the neighbours of j: b * outer(b_j, b_j)
        sub = b[None, :, :] * (b[:, :, None] * b[:, None, :])
        traces = (sub * (sub @ sub)).sum(axis=(1, 2))
        total += int(np.rint(traces).astype(np.int64).sum())
    return total


def _neighbour_degree_sums(g: Graph, a: np.ndarray | None) -> list[int]:
    if a is None:
        deg = g.degrees
        return [sum(deg[j] for j in iter_bits(row)) for row in g.rows]
    return (a @ np.asarray(g.degrees, dtype=np.float64)).astype(np.int64).tolist()


def _census(g: Graph, tier: int, dense: bool, walks: WalkStats | None) -> MotifCounts:
    a = None
    if dense:
        if g.n > DENSE_MAX_NODES:
            raise CountOverflowError(f"dense path is exact only for n <= {DENSE_MAX_NODES}")
        a = adjacency_matrix(g)
    if walks is None:
        fourth = tier >= 5
        walks = dense_walk_stats(a, fourth) if dense else walk_stats(g, fourth=fourth)
    deg = g.degrees
    out: dict[str, int] = {}

    m3 = sum(k * (k - 1) for k in deg) // 2
    assert walks.tr_g3 % 6 == 0, "closed 3-walks must come in sixes"
    m7 = walks.tr_g3 // 6
    out.update(m3_3=m3, m7_3=m7)

    if tier >= 4:
        # edge sums grouped by endpoint: sum over j in N(i) of (k_j - 1) is s_i - k_i
        spill = [s - k for s, k in zip(_neighbour_degree_sums(g, a), deg)]
        m11 = sum(comb(k, 3) for k in deg)
        m13 = sum((k - 1) * t for k, t in zip(deg, spill)) // 2 - 3 * m7
        m15 = sum(t * (k - 2) for t, k in zip(walks.g3_diag, deg) if k > 2) // 2
        m63, rem = divmod(_neighbourhood_traces(g, a), 24)
        assert rem == 0
        out.update(m11_4=m11, m13_4=m13, m15_4=m15, m63_4=m63)

        if tier >= 5:
            if walks.sum_offdiag_g4 is None:
                raise ValueError("5-node census needs WalkStats with the g^4 sum")
            m75 = sum(comb(k, 4) for k in deg)
            # both orientations of every edge (i, j): i hosts the pair, j the tail
            m77 = sum(comb(k - 1, 2) * t for k, t in zip(deg, spill) if k > 2) - 2 * m15
            s4, rem = divmod(walks.sum_offdiag_g4, 2)
            assert rem == 0
            m86 = s4 - 2 * m3 - 9 * m7 - 3 * m11 - 2 * m13 - 2 * m15
            m1023, rem = divmod(_second_neighbourhood_traces(g, a), 120)
            assert rem == 0
            out.update(m75_5=m75, m77_5=m77, m86_5=m86, m1023_5=m1023)

    for name, value in out.items():
        checked(value, name)
    return MotifCounts(**out, tiers=tuple(range(3, tier + 1)))


def census3(g: Graph, dense: bool = False, walks: WalkStats | None = None) -> MotifCounts:
    return _census(g, 3, dense, walks)


def census4(g: Graph, dense: bool = False, walks: WalkStats | None = None) -> MotifCounts:
    return _census(g, 4, dense, walks)


def census5(g: Graph, dense: bool = False, walks: WalkStats | None = None) -> MotifCounts:
    return _census(g, 5, dense, walks)


def full_census(g: Graph, dense: bool = False, walks: WalkStats | None = None) -> MotifCounts:
    """All ten counts off a single :func:`walk_stats` pass."""
    return _census(g, 5, dense, walks)
