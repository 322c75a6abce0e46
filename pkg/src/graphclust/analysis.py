"""Snapshot series, correlation tests, analytic-vs-naive timing and oracle checks."""

from __future__ import annotations

import csv
import io
import logging
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import oracle
from .census import full_census
from .clustering import c_analytic, from_census
from .errors import GraphClustError, UndefinedCoefficientError, ValidationError
from .generators import gnp_connected
from .graph import Graph, density, read_edge_list

log = logging.getLogger(__name__)

SERIES_COLUMNS = ("C3", "C4", "C5", "density")


@dataclass
class SeriesTable:
    """One row per snapshot file. ``None`` marks an undefined cell."""

    snapshot_ids: list[str] = field(default_factory=list)
    columns: dict[str, list[Fraction | None]] = field(
        default_factory=lambda: {c: [] for c in SERIES_COLUMNS}
    )
    errors: dict[str, str] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.snapshot_ids)

    def add_row(self, snapshot_id: str, values: dict[str, Fraction | None]) -> None:
        self.snapshot_ids.append(snapshot_id)
        for c in self.columns:
            self.columns[c].append(values.get(c))

    def defined(self, column: str) -> list[bool]:
        return [v is not None for v in self.columns[column]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["snapshot", *self.columns])
        for r, sid in enumerate(self.snapshot_ids):
            w.writerow([sid, *("NA" if col[r] is None else repr(float(col[r])) for col in self.columns.values())])
        return buf.getvalue()


def snapshot_row(g: Graph) -> dict[str, Fraction | None]:
    counts = full_census(g)
    row: dict[str, Fraction | None] = {}
    for b in (3, 4, 5):
        try:
            row[f"C{b}"] = from_census(counts, b).value
        except UndefinedCoefficientError:
            row[f"C{b}"] = None
    row["density"] = density(g) if g.n >= 2 else None
    return row


def series_scan(directory: str | Path) -> SeriesTable:
    """Compute the four statistics for every edge-list file, in filename order.

    A file that cannot be read or parsed lands in ``errors`` and the scan
    carries on.
    """
    directory = Path(directory)
    files = sorted(p for p in directory.iterdir() if p.is_file() and not p.name.startswith("."))
    if not files:
        raise ValidationError(f"no snapshot files in {directory}")
    table = SeriesTable()
    for path in files:
        try:
            g = read_edge_list(path)
        except (OSError, UnicodeDecodeError, GraphClustError) as exc:
            log.warning("skipping %s: %s", path.name, exc)
            table.errors[path.name] = str(exc)
            continue
        table.add_row(path.name, snapshot_row(g))
    return table


@dataclass
class CorrMatrix:
    names: tuple[str, ...]
    r: list[list[float | None]]
    n: list[list[int]]
    p: list[list[float | None]]

    def get(self, a: str, b: str) -> float | None:
        return self.r[self.names.index(a)][self.names.index(b)]

    def pvalue(self, a: str, b: str) -> float | None:
        return self.p[self.names.index(a)][self.names.index(b)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "b", "n", "r", "p"])
        for i, a in enumerate(self.names):
            for j, b in enumerate(self.names):
                r, p = self.r[i][j], self.p[i][j]
                w.writerow([a, b, self.n[i][j], "NA" if r is None else r, "NA" if p is None else p])
        return buf.getvalue()


def pearson(x: np.ndarray, y: np.ndarray) -> float | None:
    """Pearson r; None when either column is constant."""
    dx, dy = x - x.mean(), y - y.mean()
    sx, sy = np.sqrt((dx * dx).sum()), np.sqrt((dy * dy).sum())
    if sx == 0 or sy == 0:
        return None
    return float(np.clip((dx * dy).sum() / (sx * sy), -1.0, 1.0))


def permutation_pvalue(x: np.ndarray, y: np.ndarray, r: float, permutations: int, seed: int) -> float:
    """Two-sided p from shuffling ``y``: ``(#{|r*| >= |r|} + 1) / (K + 1)``."""
    rng = np.random.default_rng(seed)
    shuffled = rng.permuted(np.tile(y, (permutations, 1)), axis=1)
    dx = x - x.mean()
    dy = shuffled - shuffled.mean(axis=1, keepdims=True)
    rs = (dy @ dx) / (np.sqrt((dx * dx).sum()) * np.sqrt((dy * dy).sum(axis=1)))
    hits = int(np.count_nonzero(np.abs(rs) >= abs(r) - 1e-12))
    return (hits + 1) / (permutations + 1)


def pearson_matrix(
    table: SeriesTable | dict[str, Sequence[float | None]],
    permutations: int = 10_000,
    seed: int = 0,
) -> CorrMatrix:
    """Pairwise Pearson r over rows defined in both columns.

    Pairs with fewer than three joint rows or a constant column get ``None``
    for both r and p (reported as NA).
    """
    columns = table.columns if isinstance(table, SeriesTable) else table
    names = tuple(columns)
    k = len(names)
    r = [[None] * k for _ in range(k)]
    p = [[None] * k for _ in range(k)]
    sizes = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            xs, ys = columns[names[i]], columns[names[j]]
            joint = [(float(a), float(b)) for a, b in zip(xs, ys) if a is not None and b is not None]
            sizes[i][j] = sizes[j][i] = len(joint)
            if len(joint) < 3:
                continue
            x, y = (np.array(v) for v in zip(*joint))
            rij = pearson(x, y)
            if rij is None:
                continue
            if i == j:
                rij, pij = 1.0, 0.0
            else:
                pij = permutation_pvalue(x, y, rij, permutations, seed)
            r[i][j] = r[j][i] = rij
            p[i][j] = p[j][i] = pij
    return CorrMatrix(names, r, sizes, p)


BENCH_HEADER = ("algorithm", "statistic", "n", "p", "rep", "seed", "seconds", "value_num", "value_den")
STATISTICS = {"C3": 3, "C4": 4, "C5": 5}


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    statistic: str
    n: int
    p: float
    rep: int
    seed: int
    seconds: float
    value: Fraction

    def row(self) -> list:
        d = asdict(self)
        d.pop("value")
        return [*d.values(), self.value.numerator, self.value.denominator]


def bench_seed(seed: int, n: int, rep: int) -> int:
    return seed + 1000 * n + rep


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return time.perf_counter() - t0, out


def bench_run(
    sizes: Iterable[int],
    p: float = 0.9,
    reps: int = 3,
    statistics: Iterable[str] = ("C3", "C4", "C5"),
    seed: int = 0,
    warmup: bool = True,
    dense: bool = True,
    max_tries: int = 1000,
) -> list[BenchRecord]:
    """Time closed-form C(b) against subset enumeration on the same graphs.

    Replication ``rep`` at size ``n`` draws a connected G(n, p) from seed
    ``bench_seed(seed, n, rep)``. With ``warmup`` each (algorithm, n, stat)
    cell first runs once untimed on the rep-0 graph. Raises
    :class:`ValidationError` if the two routes ever disagree.
    """
    stats = [s.upper() for s in statistics]
    for s in stats:
        if s not in STATISTICS:
            raise ValidationError(f"unknown statistic {s!r}")
    if reps < 1:
        raise ValidationError("reps must be at least 1")
    records: list[BenchRecord] = []
    for n in sizes:
        if n < 5:
            raise ValidationError(f"benchmark sizes must be >= 5, got {n}")
        graphs = []
        for rep in range(reps):
            s = bench_seed(seed, n, rep)
            try:
                graphs.append((rep, s, gnp_connected(n, p, s, max_tries)[0]))
            except GraphClustError as exc:
                raise type(exc)(f"bench cell n={n} rep={rep}: {exc}") from exc
        for stat in stats:
            b = STATISTICS[stat]
            if warmup:
                c_analytic(graphs[0][2], b, dense=dense)
                oracle.c_naive(graphs[0][2], b)
            for rep, s, g in graphs:
                t_fast, fast = _timed(c_analytic, g, b, dense=dense)
                t_slow, slow = _timed(oracle.c_naive, g, b)
                if fast.value != slow.value:
                    raise ValidationError(
                        f"{stat} mismatch at n={n} rep={rep}: {fast.value} vs {slow.value}"
                    )
                records.append(BenchRecord("analytic", stat, n, p, rep, s, t_fast, fast.value))
                records.append(BenchRecord("naive", stat, n, p, rep, s, t_slow, slow.value))
                log.info("%s n=%d rep=%d analytic %.4gs naive %.4gs", stat, n, rep, t_fast, t_slow)
    return records


def bench_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_HEADER)
    for rec in records:
        w.writerow(rec.row())
    return buf.getvalue()


@dataclass
class VerifyReport:
    b: int
    analytic: dict[str, int | str | None]
    oracle: dict[str, int | str | None]
    mismatches: list[dict] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "analytic": self.analytic,
            "oracle": self.oracle,
            "match": self.match,
            "mismatches": self.mismatches,
        }


def _coefficient_text(fn, *args) -> str | None:
    try:
        value = fn(*args).value
    except UndefinedCoefficientError:
        return None
    return f"{value.numerator}/{value.denominator}"


def verify(g: Graph, b: int) -> VerifyReport:
    """Compare every census count up to order b, and C(b), with brute force."""
    if not 3 <= b <= 5:
        raise ValidationError(f"verify covers b in 3..5, got {b}")
    if b > g.n:
        raise ValidationError(f"b={b} exceeds n={g.n}")
    counts = full_census(g)
    analytic: dict[str, int | str | None] = {}
    brute: dict[str, int | str | None] = {}
    for name, motif in oracle.CENSUS_MOTIFS.items():
        if motif.b <= b:
            analytic[motif.key] = getattr(counts, name)
            brute[motif.key] = oracle.brute_motif_count(g, motif)
    key = f"C{b}"
    analytic[key] = _coefficient_text(lambda: from_census(counts, b))
    brute[key] = _coefficient_text(oracle.c_naive, g, b)
    mismatches = [
        {"component": k, "analytic": analytic[k], "oracle": brute[k]}
        for k in analytic
        if analytic[k] != brute[k]
    ]
    return VerifyReport(b, analytic, brute, mismatches)
