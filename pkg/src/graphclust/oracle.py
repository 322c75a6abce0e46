"""Brute-force reference counts, kept deliberately simple.

Every b-node subset of the graph is visited and reduced to its *pattern*:
the upper triangle of the induced adjacency matrix read row by row as a
binary number (first pair = most significant bit). Motif ids, clique tests
and spanning-tree counts are then functions of the pattern alone, which is
what lets the per-pattern work be cached without skipping any subset.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .errors import ValidationError
from .graph import Graph
from .report import ClusteringReport, make_report

MIN_MOTIF_NODES, MAX_MOTIF_NODES = 3, 5


@dataclass(frozen=True, order=True)
class MotifId:
    b: int
    a: int

    @property
    def key(self) -> str:
        return f"M{self.a}_{self.b}"

    @property
    def edge_count(self) -> int:
        return self.a.bit_count()


CENSUS_MOTIFS: dict[str, MotifId] = {
    "m3_3": MotifId(3, 3),
    "m7_3": MotifId(3, 7),
    "m11_4": MotifId(4, 11),
    "m13_4": MotifId(4, 13),
    "m15_4": MotifId(4, 15),
    "m63_4": MotifId(4, 63),
    "m75_5": MotifId(5, 75),
    "m77_5": MotifId(5, 77),
    "m86_5": MotifId(5, 86),
    "m1023_5": MotifId(5, 1023),
}


@lru_cache(maxsize=None)
def pair_bits(b: int) -> tuple[tuple[int, int, int], ...]:
    """``(x, y, bit)`` for each pair ``x < y`` in row-by-row order, MSB first."""
    pairs = list(combinations(range(b), 2))
    top = len(pairs) - 1
    return tuple((x, y, 1 << (top - k)) for k, (x, y) in enumerate(pairs))


def pattern_from_adjacency(adj: Sequence[Sequence[int]]) -> int:
    b = len(adj)
    for x in range(b):
        if len(adj[x]) != b or adj[x][x]:
            raise ValidationError("adjacency must be square with a zero diagonal")
    pattern = 0
    for x, y, bit in pair_bits(b):
        if adj[x][y] != adj[y][x]:
            raise ValidationError("adjacency must be symmetric")
        if adj[x][y]:
            pattern |= bit
    return pattern


def pattern_edges(b: int, pattern: int) -> list[tuple[int, int]]:
    return [(x, y) for x, y, bit in pair_bits(b) if pattern & bit]


def _pattern_of(b: int, edges: Sequence[tuple[int, int]]) -> int:
    index = {(x, y): bit for x, y, bit in pair_bits(b)}
    pattern = 0
    for x, y in edges:
        pattern |= index[(min(x, y), max(x, y))]
    return pattern


@lru_cache(maxsize=None)
def canonical_pattern(b: int, pattern: int) -> int:
    """Smallest pattern over all b! relabellings."""
    edges = pattern_edges(b, pattern)
    best = pattern
    for perm in permutations(range(b)):
        best = min(best, _pattern_of(b, [(perm[x], perm[y]) for x, y in edges]))
    return best


def canonical_motif_id(adj: Sequence[Sequence[int]]) -> MotifId:
    b = len(adj)
    if not MIN_MOTIF_NODES <= b <= MAX_MOTIF_NODES:
        raise ValidationError(f"motif ids are defined for 3..5 nodes, got {b}")
    return MotifId(b, canonical_pattern(b, pattern_from_adjacency(adj)))


def _check_motif(motif: MotifId) -> None:
    if not MIN_MOTIF_NODES <= motif.b <= MAX_MOTIF_NODES:
        raise ValidationError(f"motif ids are defined for 3..5 nodes, got {motif.b}")
    if not 0 < motif.a < 1 << comb(motif.b, 2) or canonical_pattern(motif.b, motif.a) != motif.a:
        raise ValidationError(f"{motif.key} is not a canonical motif id")


@lru_cache(maxsize=None)
def nested_occurrences(b: int, pattern: int, a: int) -> int:
    """Edge subsets of ``pattern`` whose canonical id is ``a``."""
    edges = pattern_edges(b, pattern)
    total = 0
    for chosen in combinations(edges, a.bit_count()):
        if canonical_pattern(b, _pattern_of(b, chosen)) == a:
            total += 1
    return total


def subset_patterns(g: Graph, b: int) -> Counter[int]:
    """Histogram of induced patterns over every b-subset, in lexicographic order."""
    rows = g.rows
    pairs = pair_bits(b)
    hist: Counter[int] = Counter()
    for sub in combinations(range(g.n), b):
        pattern = 0
        for x, y, bit in pairs:
            if rows[sub[x]] >> sub[y] & 1:
                pattern |= bit
        hist[pattern] += 1
    return hist


def brute_motif_count(g: Graph, motif: MotifId) -> int:
    _check_motif(motif)
    if g.n < motif.b:
        return 0
    hist = subset_patterns(g, motif.b)
    return sum(c * nested_occurrences(motif.b, p, motif.a) for p, c in hist.items())


def _bareiss_det(mat: list[list[int]]) -> int:
    """Determinant by fraction-free Gaussian elimination; exact for ints."""
    a = [row[:] for row in mat]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _laplacian_minor(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    lap = [[0] * n for _ in range(n)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return [row[1:] for row in lap[1:]]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: the (0, 0) cofactor of the Laplacian."""
    if g.n < 1:
        raise ValidationError("spanning trees need at least one node")
    return _bareiss_det(_laplacian_minor(g.n, list(g.edges())))


@lru_cache(maxsize=None)
def pattern_tree_count(b: int, pattern: int) -> int:
    return _bareiss_det(_laplacian_minor(b, pattern_edges(b, pattern)))


def _check_order(g: Graph, b: int) -> None:
    if not 3 <= b <= g.n:
        raise ValidationError(f"need 3 <= b <= n, got b={b}, n={g.n}")


def _clique_and_tree_counts(g: Graph, b: int) -> tuple[int, int]:
    hist = subset_patterns(g, b)
    full = (1 << comb(b, 2)) - 1
    trees = sum(c * pattern_tree_count(b, p) for p, c in hist.items())
    return hist.get(full, 0), trees


def count_b_cliques(g: Graph, b: int) -> int:
    _check_order(g, b)
    return _clique_and_tree_counts(g, b)[0]


def count_b_spanning_trees(g: Graph, b: int) -> int:
    """Tree subgraphs on exactly b nodes: the sum of spanning-tree counts of
    every induced b-subgraph."""
    _check_order(g, b)
    return _clique_and_tree_counts(g, b)[1]


def c_naive(g: Graph, b: int) -> ClusteringReport:
    """C(b) by visiting every b-subset once: no analytic shortcuts, no pruning."""
    _check_order(g, b)
    cliques, trees = _clique_and_tree_counts(g, b)
    return make_report(b, cliques, trees)
