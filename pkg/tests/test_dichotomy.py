"""Tests for classification, cross-validation, corpus runs and golden checks"""
import numpy as np
import pytest

from config.run_config import RunConfig
from data.atlas_provider import AtlasProvider
from data.models import CorpusEntry
from data.processor import IMPLICATIONS, CorpusProcessor
from dichotomy.classify import Complexity, Rationale, classify
from dichotomy.corpus import _natural_key, corpus_run, process_entry
from dichotomy.cross_validate import ImplicationStatus, cross_validate
from dichotomy.golden import GOLDEN_CHECKS, check_dodecagon, check_taylor_patterns, run_golden_checks
from graphs.core import compute_core
from graphs.graph import Graph


@pytest.mark.parametrize("h, verdict, rationale", [
    (Graph.from_edges(3, [(0, 1), (1, 2), (2, 0), (1, 1)]), Complexity.P, Rationale.LOOP),
    (Graph.cycle(6), Complexity.P, Rationale.BIPARTITE),
    (Graph(2, frozenset()), Complexity.P, Rationale.BIPARTITE),
    (Graph.cycle(5), Complexity.NP_COMPLETE, Rationale.NON_BIPARTITE_LOOPLESS),
    (Graph.complete(4), Complexity.NP_COMPLETE, Rationale.NON_BIPARTITE_LOOPLESS),
])
def test_classify(h, verdict, rationale):
    result = classify(h, "g")
    assert result.verdict is verdict
    assert result.rationale is rationale
    assert result.bipartite.validate(h)


def test_classification_dict():
    data = classify(Graph.complete(3), "k3").to_dict()
    assert data["verdict"] == "NP-complete"
    assert data["certificate"]["bipartite"] is False
    assert data["loop"] is None


@pytest.mark.parametrize("h", [
    Graph.complete(2),
    Graph.complete(3),
    Graph.cycle(6),
    Graph.from_edges(3, [(0, 1), (1, 2), (2, 2)]),
    Graph(1, frozenset()),
])
def test_cross_validation_is_consistent(h):
    report = cross_validate(h, RunConfig())
    assert report.consistent
    assert report.fully_checked
    assert [c.name for c in report.implications] == list(IMPLICATIONS)
    assert all(c.status is ImplicationStatus.VERIFIED for c in report.implications)


def test_cross_validation_of_c6_works_on_its_core():
    """C6 retracts onto K2, so mhom is built on K2 and not on C6"""
    report = cross_validate(Graph.cycle(6), RunConfig(), "c6")
    assert report.core.core.n == 2
    assert report.mhom_size == 2
    data = report.to_dict()
    assert data["graph"] == "c6"
    assert data["core_size"] == 2
    assert data["component_verdicts"] == ["CONTRACTIBLE", "CONTRACTIBLE"]


def test_budget_exhaustion_leaves_implications_unchecked():
    config = RunConfig(max_nodes=1, identity="siggers4", idempotent=False)
    report = cross_validate(Graph.cycle(5), config)
    statuses = {c.name: c.status for c in report.implications}
    assert statuses["hardness"] in (ImplicationStatus.VERIFIED, ImplicationStatus.UNCHECKED)
    assert report.consistent


def test_core_guard_is_reported_not_raised():
    report = cross_validate(Graph.cycle(9), RunConfig(max_core_vertices=8))
    assert report.core is None
    assert report.errors and report.errors[0].startswith("core:")
    assert not report.fully_checked


def test_connected_atlas_sweep():
    """Every connected graph up to 5 vertices: search agrees with the classification,
    and bipartite cores give contractible components"""
    for entry in AtlasProvider(5, connected_only=True).iter_entries():
        report = cross_validate(entry.graph, RunConfig(), entry.graph_id)
        assert report.fully_checked, entry.graph_id
        if report.classification.rationale is Rationale.BIPARTITE:
            assert all(v.verdict.value == "CONTRACTIBLE" for v in report.component_verdicts), entry.graph_id


def test_natural_sort_key():
    ids = ["atlas:10", "atlas:2", "atlas:1"]
    assert sorted(ids, key=_natural_key) == ["atlas:1", "atlas:2", "atlas:10"]


def test_process_entry_skipped():
    row = process_entry(CorpusEntry("bad", "file", error="malformed"), RunConfig())
    assert row == {"graph": "bad", "status": "skipped", "reason": "malformed"}


def test_corpus_run_on_small_atlas():
    entries = list(AtlasProvider(3).iter_entries())
    report = corpus_run(entries, RunConfig())
    assert [row["graph"] for row in report.rows] == [e.graph_id for e in entries]
    assert report.summary["processed"] == len(entries)
    assert report.summary["inconsistencies"] == 0
    assert report.exit_code == 0


def test_corpus_run_with_skips_and_jobs():
    entries = [CorpusEntry("f:2", "f", graph=Graph.complete(3)),
               CorpusEntry("f:1", "f", error="bad byte"),
               CorpusEntry("f:10", "f", graph=Graph.path(3))]
    report = corpus_run(entries, RunConfig(jobs=2))
    assert [row["graph"] for row in report.rows] == ["f:1", "f:2", "f:10"]
    assert report.summary["skipped"] == 1
    assert report.summary["verdicts"] == {"NP-complete": 1, "P": 1}


def test_corpus_summary_counts_unchecked():
    rows = [{
        "graph": "g",
        "status": "ok",
        "cross_validation": {
            "classification": {"verdict": "NP-complete"},
            "consistent": True,
            "implications": [{"name": name, "status": "UNCHECKED" if name == "hardness" else "VERIFIED"}
                             for name in IMPLICATIONS],
        },
    }]
    summary = CorpusProcessor.summarize(CorpusProcessor.rows_to_dataframe(rows))
    assert summary["unchecked"] == 1
    assert summary["inconsistencies"] == 0
    assert summary["implications"]["hardness"] == {"UNCHECKED": 1}


def test_empty_corpus():
    report = corpus_run([], RunConfig())
    assert report.rows == []
    assert report.summary["graphs"] == 0
    assert report.exit_code == 0


def test_golden_checks_registry():
    assert set(GOLDEN_CHECKS) == {"dodecagon", "flip-loop", "edge-flip", "taylor-patterns", "search", "sub-taylor"}


def test_dodecagon_check():
    check = check_dodecagon(RunConfig())
    assert check.passed, check.observed
    assert check.observed["betti"] == [1, 1]


def test_taylor_pattern_check():
    assert check_taylor_patterns(RunConfig()).passed


def test_run_selected_golden_checks():
    results = run_golden_checks(RunConfig(), ["dodecagon", "flip-loop", "edge-flip"])
    assert [r.passed for r in results] == [True, True, True]
    assert results[0].to_dict()["name"] == "mhom(K2,K3) is a 12-cycle"


def test_classification_ignores_labels_and_passes_to_the_core():
    rng = np.random.default_rng(17)
    for entry in AtlasProvider(5).iter_entries():
        for h in (entry.graph, entry.graph.with_loops([entry.graph.n - 1])):
            expected = classify(h)
            shuffled = h.relabel([int(v) for v in rng.permutation(h.n)])
            for other in (shuffled, compute_core(h).core):
                result = classify(other)
                assert (result.verdict, result.rationale) == (expected.verdict, expected.rationale), entry.graph_id
