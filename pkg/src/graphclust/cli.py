"""``graphclust`` command line.

Exit codes: 0 ok, 1 validation error, 2 undefined coefficient,
3 resource cap, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from .analysis import bench_csv, bench_run, pearson_matrix, series_scan, verify
from .census import full_census
from .cliques import DEFAULT_MAX_CLIQUES, maximal_cliques
from .clustering import c_analytic, c_general
from .errors import GraphClustError, UndefinedCoefficientError
from .generators import FAMILIES, GenSpec
from .graph import Graph, is_connected, read_edge_list, write_edge_list

log = logging.getLogger("graphclust")

EXIT_IO = 4


def _load(path: str) -> Graph:
    g = read_edge_list(path)
    if g.n and not is_connected(g):
        log.warning("%s is disconnected; coefficients are computed over all components", path)
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_census(args) -> int:
    counts = full_census(_load(args.file), dense=args.dense)
    _emit(counts.to_csv() if args.csv else _json(counts.to_dict()), args.output)
    return 0


def cmd_clustering(args) -> int:
    g = _load(args.file)
    rows, status = [], 0
    for b in args.b:
        try:
            report = c_general(g, b) if args.naive or b > 5 else c_analytic(g, b, dense=args.dense)
        except UndefinedCoefficientError as exc:
            log.error("%s", exc)
            rows.append({"b": b, "error": str(exc)})
            status = UndefinedCoefficientError.exit_code
            continue
        rows.append(report.to_dict())
    if args.csv:
        buf = io.StringIO()
        header = ["b", "cliques", "spanning_trees", "cayley", "value_num", "value_den", "value"]
        w = csv.DictWriter(buf, header, restval="NA", extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        _emit(buf.getvalue(), args.output)
    else:
        _emit(_json(rows), args.output)
    return status


def cmd_cliques(args) -> int:
    g = _load(args.file)
    report = maximal_cliques(g, max_cliques=args.max_cliques)
    show_all = not (args.distribution or args.degree_stats or args.list)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if args.distribution or show_all:
            w.writerow(["k", "count"])
            w.writerows(report.size_histogram.items())
        if args.degree_stats:
            w.writerow(["k", "mean", "median", "min", "max"])
            for k, s in report.degree_stats_per_order.items():
                w.writerow([k, float(s.mean), float(s.median), s.min, s.max])
        if args.list:
            w.writerow(["k", "members"])
            for c in report.maximal_cliques:
                w.writerow([len(c), " ".join(g.labels[i] for i in c)])
        _emit(buf.getvalue(), args.output)
        return 0
    out: dict = {"clique_number": report.clique_number, "maximal_cliques": len(report.maximal_cliques)}
    if args.distribution or show_all:
        out["distribution"] = {str(k): v for k, v in report.size_histogram.items()}
    if args.degree_stats or show_all:
        out["degree_stats"] = {str(k): s.to_dict() for k, s in report.degree_stats_per_order.items()}
        if report.global_degree_mean is not None:
            out["global_degree"] = {
                "mean": float(report.global_degree_mean),
                "median": float(report.global_degree_median),
            }
    if args.list:
        out["cliques"] = [[g.labels[i] for i in c] for c in report.maximal_cliques]
    _emit(_json(out), args.output)
    return 0


def cmd_gen(args) -> int:
    if args.config:
        spec = GenSpec.from_json(Path(args.config).read_text(encoding="utf-8"))
    else:
        spec = GenSpec(
            family=args.family,
            n=args.n,
            b=args.b,
            p=args.p,
            seed=args.seed,
            max_tries=args.max_tries if args.family == "gnp_connected" else None,
        )
    write_edge_list(spec.build(), args.output)
    if args.save_spec:
        Path(args.save_spec).write_text(spec.to_json() + "\n", encoding="utf-8")
    return 0


def cmd_series(args) -> int:
    table = series_scan(args.directory)
    text = table.to_csv()
    if args.corr:
        text += "\n" + pearson_matrix(table, args.permutations, args.seed).to_csv()
    for name, err in table.errors.items():
        log.error("%s: %s", name, err)
    _emit(text, args.output)
    return 0


def cmd_bench(args) -> int:
    stats = [s.strip().upper() for s in args.stats.split(",") if s.strip()]
    records = bench_run(args.sizes, args.p, args.reps, stats, args.seed, dense=not args.bitset)
    _emit(bench_csv(records), args.output)
    return 0


def cmd_verify(args) -> int:
    report = verify(read_edge_list(args.file), args.b)
    _emit(_json(report.to_dict()), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphclust", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("-o", "--output", help="write here instead of stdout")
        return p

    p = add("census", cmd_census, "the ten nested subgraph counts")
    p.add_argument("file")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true", help="default")
    p.add_argument("--dense", action="store_true", help="numpy matrix path")

    p = add("clustering", cmd_clustering, "generalized clustering coefficients")
    p.add_argument("file")
    p.add_argument("--b", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--naive", action="store_true", help="count over all b-subsets")
    p.add_argument("--dense", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--json", action="store_true", help="default")

    p = add("cliques", cmd_cliques, "maximal cliques")
    p.add_argument("file")
    p.add_argument("--distribution", action="store_true")
    p.add_argument("--degree-stats", action="store_true")
    p.add_argument("--list", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--max-cliques", type=int, default=DEFAULT_MAX_CLIQUES)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.set_defaults(func=cmd_gen)
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-tries", type=int, default=1000)
    p.add_argument("--config", help="GenSpec JSON file instead of flags")
    p.add_argument("--save-spec", help="also write the GenSpec JSON here")
    p.add_argument("-o", "--output", required=True)

    p = add("series", cmd_series, "statistics over a directory of snapshots")
    p.add_argument("directory")
    p.add_argument("--corr", action="store_true")
    p.add_argument("--permutations", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = add("bench", cmd_bench, "time closed forms against subset enumeration")
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, default=0.9)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--stats", default="c3,c4,c5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bitset", action="store_true", help="time the bit-row path instead of numpy")

    p = add("verify", cmd_verify, "check closed forms against brute force")
    p.add_argument("file")
    p.add_argument("--b", type=int, required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    if args.command == "gen" and not args.config and (args.family is None or args.n is None):
        parser.error("gen needs a family and --n, or --config")
    try:
        return args.func(args)
    except GraphClustError as exc:
        log.error("%s", exc)
        return exc.exit_code
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
