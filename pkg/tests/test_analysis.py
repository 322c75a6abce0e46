from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphclust.analysis import (
    BENCH_HEADER,
    SeriesTable,
    bench_csv,
    bench_run,
    pearson_matrix,
    series_scan,
    verify,
)
from graphclust.errors import ValidationError
from graphclust.generators import chain_clique, complete, gnp_connected
from graphclust.graph import Graph, write_edge_list


def write_snapshots(directory, graphs: dict[str, Graph]) -> None:
    for name, g in graphs.items():
        write_edge_list(g, directory / name)


class TestSeriesScan:
    def test_two_files(self, tmp_path):
        write_snapshots(tmp_path, {"a.txt": complete(5), "b.txt": chain_clique(4, 8)})
        t = series_scan(tmp_path)
        assert t.snapshot_ids == ["a.txt", "b.txt"]
        assert set(t.columns) == {"C3", "C4", "C5", "density"}
        assert all(len(col) == 2 for col in t.columns.values())
        assert t.columns["C3"] == [1, Fraction(2, 3)]
        assert t.columns["density"][0] == 1

    def test_perfect_matching_flags_c3(self, tmp_path):
        write_snapshots(tmp_path, {"m.txt": Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])})
        t = series_scan(tmp_path)
        assert t.defined("C3") == [False]
        assert t.columns["density"] == [Fraction(1, 5)]
        assert "NA" in t.to_csv()

    def test_chain_clique_series(self, tmp_path):
        write_snapshots(tmp_path, {f"snap{n:03d}.txt": chain_clique(4, n) for n in range(6, 66)})
        t = series_scan(tmp_path)
        assert len(t) == 60
        for sid, v in zip(t.snapshot_ids, t.columns["C3"]):
            n = int(sid[4:7])
            assert v == Fraction(12, n + 10)

    def test_bad_file_is_recorded(self, tmp_path):
        write_snapshots(tmp_path, {"a.txt": complete(4)})
        (tmp_path / "b.txt").write_text("0 1\nthree\n")
        t = series_scan(tmp_path)
        assert t.snapshot_ids == ["a.txt"]
        assert "b.txt" in t.errors and "line 2" in t.errors["b.txt"]

    def test_hidden_files_skipped(self, tmp_path):
        write_snapshots(tmp_path, {"a.txt": complete(4)})
        (tmp_path / ".DS_Store").write_text("junk")
        assert series_scan(tmp_path).snapshot_ids == ["a.txt"]

    def test_empty_directory(self, tmp_path):
        with pytest.raises(ValidationError):
            series_scan(tmp_path)

    def test_rerun_is_identical(self, tmp_path):
        write_snapshots(tmp_path, {f"{c}.txt": chain_clique(5, 10 + i) for i, c in enumerate("zyxab")})
        first, second = series_scan(tmp_path), series_scan(tmp_path)
        assert first.snapshot_ids == sorted(first.snapshot_ids)
        assert first.to_csv() == second.to_csv()


class TestPearson:
    x = list(range(10))

    def test_perfect_positive(self):
        m = pearson_matrix({"x": self.x, "y": [2 * v for v in self.x]}, permutations=999)
        assert m.get("x", "y") == pytest.approx(1.0, abs=1e-12)
        # no shuffle can beat |r| = 1 except ties at 1, so p is tiny
        assert m.pvalue("x", "y") < 0.01

    def test_perfect_negative(self):
        m = pearson_matrix({"x": self.x, "y": [-v for v in self.x]}, permutations=999)
        assert m.get("x", "y") == pytest.approx(-1.0, abs=1e-12)

    def test_constant_column_is_na(self):
        m = pearson_matrix({"x": self.x, "c": [3] * 10}, permutations=99)
        assert m.get("x", "c") is None and m.pvalue("x", "c") is None
        assert m.get("c", "c") is None
        assert "NA" in m.to_csv()

    def test_too_few_joint_rows(self):
        m = pearson_matrix({"x": [1, 2, None, None], "y": [None, 1, 2, 3]}, permutations=99)
        assert m.get("x", "y") is None
        assert m.n[0][1] == 1

    def test_undefined_cells_are_dropped_not_imputed(self):
        xs = [1, 2, 3, 4, None]
        ys = [2, 4, 6, 8, 100]
        m = pearson_matrix({"x": xs, "y": ys}, permutations=99)
        assert m.get("x", "y") == pytest.approx(1.0)
        assert m.n[0][1] == 4

    def test_from_series_table(self):
        t = SeriesTable()
        for n in range(6, 16):
            g = chain_clique(4, n)
            t.add_row(str(n), {"C3": Fraction(12, n + 10), "C4": Fraction(16, n + 22), "C5": None,
                               "density": Fraction(2 * g.m, n * (n - 1))})
        m = pearson_matrix(t, permutations=199)
        assert m.get("C3", "C4") > 0.99
        assert m.get("C5", "C3") is None

    def test_seeded_pvalues_repeat(self):
        rng = np.random.default_rng(1)
        cols = {"a": list(rng.normal(size=15)), "b": list(rng.normal(size=15))}
        assert pearson_matrix(cols, 500, seed=3).p == pearson_matrix(cols, 500, seed=3).p

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.tuples(st.floats(-100, 100), st.floats(-100, 100), st.floats(-100, 100)),
                 min_size=4, max_size=25),
        st.floats(0.01, 100),
        st.floats(-1000, 1000),
    )
    def test_invariants(self, rows, scale, shift):
        cols = {k: [r[i] for r in rows] for i, k in enumerate("abc")}
        base = pearson_matrix(cols, permutations=19)
        moved = pearson_matrix({**cols, "a": [scale * v + shift for v in cols["a"]]}, permutations=19)
        k = len(base.names)
        for i in range(k):
            for j in range(k):
                r, p = base.r[i][j], base.p[i][j]
                assert r == base.r[j][i] and p == base.p[j][i]
                if r is not None:
                    assert -1 <= r <= 1 and 0 <= p <= 1
                    if i == j:
                        assert r == 1
                    if "a" in (base.names[i], base.names[j]) and moved.r[i][j] is not None:
                        assert moved.r[i][j] == pytest.approx(r, abs=1e-9)

    def test_affine_invariance_tight(self):
        rng = np.random.default_rng(7)
        x, y = rng.normal(size=40), rng.normal(size=40)
        r0 = pearson_matrix({"x": list(x), "y": list(y)}, permutations=9).get("x", "y")
        r1 = pearson_matrix({"x": list(3.5 * x - 2), "y": list(y)}, permutations=9).get("x", "y")
        assert abs(r0 - r1) <= 1e-12


class TestBench:
    def test_structure(self):
        recs = bench_run([20], p=0.9, reps=3, statistics=["C3"], seed=1)
        assert len(recs) == 6
        by_rep: dict[int, set] = {}
        for r in recs:
            by_rep.setdefault(r.rep, set()).add(r.value)
        assert all(len(v) == 1 for v in by_rep.values())
        assert {r.algorithm for r in recs} == {"analytic", "naive"}

    def test_deterministic_apart_from_times(self):
        def strip(recs):
            return [(r.algorithm, r.statistic, r.n, r.rep, r.seed, r.value) for r in recs]
        a = bench_run([8, 9], reps=2, statistics=["C3", "C4", "C5"], seed=5)
        b = bench_run([8, 9], reps=2, statistics=["C3", "C4", "C5"], seed=5)
        assert strip(a) == strip(b)

    def test_uses_identical_graph(self):
        recs = bench_run([12], reps=2, statistics=["C4"], seed=2, warmup=False)
        for rec in recs:
            g, _ = gnp_connected(12, 0.9, rec.seed)
            assert verify(g, 4).analytic["C4"] == f"{rec.value.numerator}/{rec.value.denominator}"

    def test_csv(self):
        text = bench_csv(bench_run([6], reps=1, statistics=["c3"]))
        lines = text.splitlines()
        assert lines[0] == ",".join(BENCH_HEADER)
        assert len(lines) == 3

    @pytest.mark.parametrize(
        "kwargs",
        [{"sizes": [4]}, {"sizes": [8], "reps": 0}, {"sizes": [8], "statistics": ["C6"]}],
    )
    def test_bad_arguments(self, kwargs):
        with pytest.raises(ValidationError):
            bench_run(**kwargs)

    def test_sampling_failure_propagates(self):
        from graphclust.errors import SamplingError
        with pytest.raises(SamplingError, match="n=10 rep=0"):
            bench_run([10], p=0.01, reps=1, max_tries=2)


class TestVerify:
    def test_k5(self):
        rep = verify(complete(5), 5)
        assert rep.match
        assert {k: rep.analytic[k] for k in ("M75_5", "M77_5", "M86_5", "M1023_5")} == {
            "M75_5": 5, "M77_5": 60, "M86_5": 60, "M1023_5": 1,
        }
        assert rep.analytic["C5"] == "1/1"

    def test_chain_clique(self):
        rep = verify(chain_clique(4, 10), 4)
        assert rep.match and rep.analytic["C4"] == "1/2"
        assert "M75_5" not in rep.analytic

    def test_random(self):
        for s in range(5):
            g, _ = gnp_connected(9, 0.5, seed=s)
            assert verify(g, 4).match

    def test_undefined_coefficient_is_reported(self):
        rep = verify(Graph.from_edges(4, [(0, 1), (2, 3)]), 3)
        assert rep.match and rep.analytic["C3"] is None

    def test_dict_shape(self):
        d = verify(complete(3), 3).to_dict()
        assert set(d) == {"b", "analytic", "oracle", "match", "mismatches"}

    @pytest.mark.parametrize("b, n", [(6, 8), (5, 4)])
    def test_preconditions(self, b, n):
        with pytest.raises(ValidationError):
            verify(complete(n), b)
