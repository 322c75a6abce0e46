import csv
import io
import json

import pytest
from hypothesis import given, settings

from graphclust import census as census_mod
from graphclust.census import MOTIF_KEYS, census3, census4, census5, full_census
from graphclust.generators import chain_clique, complete, cycle, path, star
from graphclust.graph import Graph
from graphclust.oracle import CENSUS_MOTIFS, brute_motif_count, count_b_spanning_trees

from .conftest import petersen
from .test_graph import graphs


def counts_of(mc, names):
    return tuple(getattr(mc, name) for name in names)


TIER3 = ("m3_3", "m7_3")
TIER4 = ("m11_4", "m13_4", "m15_4", "m63_4")
TIER5 = ("m75_5", "m77_5", "m86_5", "m1023_5")


class TestExamples:
    def test_census3(self):
        assert counts_of(census3(complete(4)), TIER3) == (12, 4)
        assert counts_of(census3(path(3)), TIER3) == (1, 0)
        assert counts_of(census3(petersen()), TIER3) == (30, 0)

    def test_census4(self):
        assert counts_of(census4(complete(5)), TIER4) == (20, 60, 60, 5)
        assert counts_of(census4(star(5)), TIER4) == (4, 0, 0, 0)
        assert counts_of(census4(cycle(4)), TIER4) == (0, 4, 0, 0)

    def test_census5(self):
        assert counts_of(census5(complete(5)), TIER5) == (5, 60, 60, 1)
        assert counts_of(census5(cycle(5)), TIER5) == (0, 0, 5, 0)
        assert counts_of(census5(star(6)), TIER5) == (5, 0, 0, 0)

    def test_full_census_k5(self):
        mc = full_census(complete(5))
        assert counts_of(mc, TIER3 + TIER4 + TIER5) == (30, 10, 20, 60, 60, 5, 5, 60, 60, 1)
        assert mc.tiers == (3, 4, 5)

    def test_isolated_nodes(self):
        mc = full_census(Graph.from_edges(6, []))
        assert all(v == 0 for v in mc.to_dict().values())

    def test_chain_clique_four_six(self):
        mc = full_census(chain_clique(4, 6))
        # four triangles and one K4; the C(4) denominator is n + 22 = 28
        assert (mc.m63_4, mc.m7_3, mc.m11_4, mc.m13_4) == (1, 4, 7, 21)

    def test_examples_agree_with_oracle(self):
        for g in (complete(4), complete(5), path(3), petersen(), star(5), star(6), cycle(4), cycle(5)):
            mc = full_census(g)
            for name, motif in CENSUS_MOTIFS.items():
                assert getattr(mc, name) == brute_motif_count(g, motif), (g, name)


class TestAgainstOracle:
    @pytest.mark.parametrize("dense", [False, True])
    def test_every_count_on_corpus_subset(self, corpus, dense):
        # the full 300-graph sweep is acceptance criterion 3
        for g in corpus[::5]:
            mc = full_census(g, dense=dense)
            for name, motif in CENSUS_MOTIFS.items():
                assert getattr(mc, name) == brute_motif_count(g, motif), name

    def test_denominator_identities(self, corpus):
        for g in corpus[::3]:
            mc = full_census(g)
            assert mc.m11_4 + mc.m13_4 == count_b_spanning_trees(g, 4)
            assert mc.m75_5 + mc.m77_5 + mc.m86_5 == count_b_spanning_trees(g, 5)

    def test_nesting_never_undershoots(self, corpus):
        for g in corpus:
            mc = full_census(g)
            assert min(mc.to_dict().values()) >= 0
            assert 3 * mc.m7_3 <= mc.m3_3

    def test_triangles_from_trace(self, corpus):
        from graphclust.graph import walk_stats

        for g in corpus:
            assert walk_stats(g).tr_g3 // 6 == brute_motif_count(g, CENSUS_MOTIFS["m7_3"])

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_nodes=10))
    def test_paths_agree(self, g):
        assert full_census(g) == full_census(g, dense=True)


class TestTiers:
    def test_too_few_nodes_gives_zero(self):
        mc = full_census(complete(3))
        assert counts_of(mc, TIER4 + TIER5) == (0,) * 8
        assert counts_of(full_census(complete(4)), TIER5) == (0, 0, 0, 0)

    def test_lower_tiers_match_full(self):
        g = chain_clique(5, 11)
        full = full_census(g)
        assert census3(g).tier(3) == full.tier(3)
        assert census4(g).tier(4) == full.tier(4)

    def test_walk_stats_computed_once(self, monkeypatch):
        calls = []
        real = census_mod.walk_stats

        def spy(*args, **kwargs):
            calls.append(1)
            return real(*args, **kwargs)

        monkeypatch.setattr(census_mod, "walk_stats", spy)
        full_census(complete(6))
        assert len(calls) == 1

    def test_precomputed_walks_are_reused(self, monkeypatch):
        g = complete(6)
        ws = census_mod.walk_stats(g)
        monkeypatch.setattr(census_mod, "walk_stats", lambda *a, **k: pytest.fail("recomputed"))
        assert full_census(g, walks=ws) == full_census(g, dense=True)


class TestSerialization:
    def test_json_keys(self):
        d = full_census(complete(5)).to_dict()
        assert list(d) == list(MOTIF_KEYS)
        assert json.loads(json.dumps(d))["M1023_5"] == 1

    def test_partial_census_marks_missing_tiers(self):
        d = census3(complete(5)).to_dict()
        assert d["M7_3"] == 10 and d["M63_4"] is None

    def test_csv_row(self):
        rows = list(csv.reader(io.StringIO(full_census(complete(5)).to_csv())))
        assert rows[0] == list(MOTIF_KEYS)
        assert rows[1] == ["30", "10", "20", "60", "60", "5", "5", "60", "60", "1"]
