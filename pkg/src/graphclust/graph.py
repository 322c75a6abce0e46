"""Simple undirected graphs stored as adjacency bit-rows.

Row ``i`` is a Python int whose bit ``j`` is set iff nodes ``i`` and ``j``
are adjacent, so neighbourhood intersections are a single ``&`` and a
``bit_count()``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import CountOverflowError, EdgeListParseError, ValidationError

#: Counts are exact ints but must stay inside an unsigned 128-bit range.
COUNT_MAX = (1 << 128) - 1

#: Above this size the float64 dense path can no longer guarantee exact sums.
DENSE_MAX_NODES = 4096


def checked(value: int, what: str = "count") -> int:
    if value > COUNT_MAX or value < -COUNT_MAX:
        raise CountOverflowError(f"{what} exceeds 128-bit range")
    return value


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple undirected graph on dense ids ``0..n-1``."""

    __slots__ = ("labels", "rows", "degrees", "n", "m", "_index")

    def __init__(self, labels: Sequence[str], rows: Sequence[int]):
        labels = tuple(str(x) for x in labels)
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if len(labels) != n:
            raise ValidationError(f"{len(labels)} labels for {n} nodes")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise ValidationError("node labels must be unique")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValidationError(f"row {i} references a node outside 0..{n - 1}")
            if row >> i & 1:
                raise ValidationError(f"self-loop on node {labels[i]!r}")
            for j in iter_bits(row):
                if not rows[j] >> i & 1:
                    raise ValidationError(f"asymmetric adjacency between {i} and {j}")
        degrees = tuple(r.bit_count() for r in rows)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", sum(degrees) // 2)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop on node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(labels, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.labels, self.rows))

    def index(self, label: str) -> int:
        return self._index[label]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as ``(i, j)`` with ``i < j``."""
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> (i + 1)):
                yield i, i + 1 + j

    def edge_labels(self) -> set[frozenset[str]]:
        return {frozenset((self.labels[i], self.labels[j])) for i, j in self.edges()}


def from_edge_list(lines: Iterable[str]) -> Graph:
    """Parse whitespace-separated label pairs; ``#`` lines and blanks are skipped.

    Labels get dense ids in order of first appearance and repeated edges
    (in either orientation) collapse to one.
    """
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, line)
        a, b = parts
        if a == b:
            raise ValidationError(f"line {lineno}: self-loop on {a!r}")
        ids = []
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(index)
            ids.append(index[lab])
        edges.append((ids[0], ids[1]))
    return Graph.from_edges(len(index), edges, labels=list(index))


def read_edge_list(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh)


def format_edge_list(g: Graph) -> list[str]:
    """Edge lines with the smaller label first, sorted."""
    out = []
    for i, j in g.edges():
        a, b = sorted((g.labels[i], g.labels[j]))
        out.append(f"{a} {b}")
    out.sort()
    return out


def write_edge_list(g: Graph, path: str | Path) -> None:
    lines = format_edge_list(g)
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def density(g: Graph) -> Fraction:
    if g.n < 2:
        raise ValidationError("density needs at least two nodes")
    return Fraction(2 * g.m, g.n * (g.n - 1))


def _check_node(g: Graph, i: int) -> None:
    if not 0 <= i < g.n:
        raise ValidationError(f"node id {i} outside 0..{g.n - 1}")


def neighborhood(g: Graph, i: int) -> frozenset[int]:
    _check_node(g, i)
    return frozenset(iter_bits(g.rows[i]))


def induced_subgraph(g: Graph, nodes: Iterable[int]) -> Graph:
    """Subgraph on ``nodes``; new ids follow ascending old ids, labels carry over."""
    keep = sorted(set(nodes))
    for i in keep:
        _check_node(g, i)
    new_id = {old: new for new, old in enumerate(keep)}
    mask = sum(1 << i for i in keep)
    rows = []
    for old in keep:
        row = 0
        for j in iter_bits(g.rows[old] & mask):
            row |= 1 << new_id[j]
        rows.append(row)
    return Graph([g.labels[i] for i in keep], rows)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValidationError("connectivity is undefined for the empty graph")
    seen = frontier = 1
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= g.rows[i]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def adjacency_matrix(g: Graph, dtype=np.float64) -> np.ndarray:
    width = (g.n + 7) // 8
    raw = b"".join(row.to_bytes(width, "little") for row in g.rows)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits.reshape(g.n, width * 8)[:, : g.n].astype(dtype)


@dataclass(frozen=True)
class WalkStats:
    """Walk counts feeding the census: ``(g^3)_ii``, its trace, and the
    off-diagonal sum of ``g^4`` (None when a caller skipped it)."""

    g3_diag: tuple[int, ...]
    tr_g3: int
    sum_offdiag_g4: int | None


def walk_stats(g: Graph, dense: bool = False, fourth: bool = True) -> WalkStats:
    """Exact walk counts.

    The default path never forms a matrix power: ``(g^3)_ii`` is twice the
    number of edges inside the neighbourhood of ``i``, and the ``g^4`` sum
    uses ``1^T g^4 1 = sum_i s_i^2`` (``s_i`` the degree sum of i's
    neighbours) minus ``tr(g^4) = sum_ij ((g^2)_ij)^2``. ``dense=True``
    computes the same numbers from one numpy product.
    """
    if dense:
        return dense_walk_stats(adjacency_matrix(g), fourth)
    rows, deg = g.rows, g.degrees
    diag = [sum((row & rows[j]).bit_count() for j in iter_bits(row)) for row in rows]
    tr_g3 = checked(sum(diag), "tr(g^3)")
    if not fourth:
        return WalkStats(tuple(diag), tr_g3, None)
    total_walks = 0
    tr_g4 = 0
    for i, row in enumerate(rows):
        s = sum(deg[j] for j in iter_bits(row))
        total_walks += s * s
        two_hop = 0
        for j in iter_bits(row):
            two_hop |= rows[j]
        two_hop &= ~(1 << i)
        tr_g4 += deg[i] * deg[i]
        tr_g4 += sum((row & rows[l]).bit_count() ** 2 for l in iter_bits(two_hop))
    return WalkStats(tuple(diag), tr_g3, checked(total_walks - tr_g4, "sum (g^4)_ij"))


def dense_walk_stats(a: np.ndarray, fourth: bool = True) -> WalkStats:
    """:func:`walk_stats` from a 0/1 float adjacency matrix."""
    n = a.shape[0]
    if n > DENSE_MAX_NODES:
        raise CountOverflowError(f"dense path is exact only for n <= {DENSE_MAX_NODES}")
    # entries of a @ a are <= n, so the float64 product is exact
    a2 = (a @ a).astype(np.int64)
    diag = (a2 * a.astype(np.int64)).sum(axis=1).tolist()
    tr_g3 = checked(sum(diag), "tr(g^3)")
    if not fourth:
        return WalkStats(tuple(diag), tr_g3, None)
    s = a2.sum(axis=1).tolist()
    total_walks = sum(x * x for x in s)
    tr_g4 = sum((a2 * a2).sum(axis=1).tolist())
    return WalkStats(tuple(diag), tr_g3, checked(total_walks - tr_g4, "sum (g^4)_ij"))
