"""Verification suites: exhaustive dominance checks with sharded execution."""

import json

import pytest

from wienerseq import (
    VerificationReport,
    canonical_form,
    csv_summary,
    cycle,
    cycle_power,
    odd_caterpillar,
    path_complete,
    search_maximal_planar,
    verify_connectivity,
    verify_deletion_bound,
    verify_k_degenerate,
    verify_odd_trees,
    verify_order_size,
)


def test_order_size_suite_passes():
    rep = verify_order_size(5)
    assert rep.passed
    assert rep.graphs_checked == 21
    assert rep.violations == []
    # every extremal member is its own equality witness
    witnesses = set(rep.equality_witnesses)
    for m in range(4, 11):
        assert canonical_form(path_complete(5, m)) in witnesses


def test_connectivity_suite_equality_is_the_cycle():
    for n in (5, 6):
        rep = verify_connectivity(n, 2)
        assert rep.passed
        assert rep.equality_witnesses == [canonical_form(cycle(n))]


def test_connectivity_suite_kappa_four():
    rep = verify_connectivity(6, 4)
    assert rep.passed
    assert rep.equality_witnesses == [canonical_form(cycle_power(6, 2))]


def test_connectivity_rejects_odd_target():
    with pytest.raises(ValueError):
        verify_connectivity(6, 3)


def test_k_degenerate_suite_passes():
    for klass in ("maximal_k_degenerate", "k_tree"):
        rep = verify_k_degenerate(6, 2, klass=klass)
        assert rep.passed
        assert rep.params["class"] == klass
    rep = verify_k_degenerate(7, 1)
    assert rep.passed
    assert rep.graphs_checked == 11


def test_odd_trees_suite_witness_is_the_caterpillar():
    for n in (6, 8):
        rep = verify_odd_trees(n)
        assert rep.passed
        assert rep.equality_witnesses == [canonical_form(odd_caterpillar(n))]


def test_deletion_suite_passes():
    for n in (2, 5):
        rep = verify_deletion_bound(n)
        assert rep.passed


def test_maximal_planar_coverage_labels():
    full = search_maximal_planar(6)
    assert full.passed and full.coverage == "complete"
    assert full.graphs_checked == 2
    partial = search_maximal_planar(6, mode="apollonian")
    assert partial.passed and partial.coverage == "partial"
    assert partial.graphs_checked == 1


@pytest.mark.parametrize(
    "call",
    [
        lambda: verify_order_size(8),
        lambda: verify_order_size(1),
        lambda: verify_connectivity(9, 2),
        lambda: verify_k_degenerate(6, 2, klass="nope"),
        lambda: verify_k_degenerate(11, 2, klass="k_tree"),
        lambda: verify_odd_trees(7),
        lambda: search_maximal_planar(3),
        lambda: search_maximal_planar(10),
        lambda: search_maximal_planar(6, mode="bad"),
    ],
)
def test_domain_validation(call):
    with pytest.raises(ValueError):
        call()


def test_report_json_round_trip():
    rep = verify_order_size(4)
    again = VerificationReport.from_json(rep.to_json())
    assert again == rep
    doc = json.loads(rep.to_json())
    assert set(doc) == {
        "suite",
        "params",
        "graphs_checked",
        "violations",
        "equality_witnesses",
        "elapsed_s",
        "shards",
    }
    lean = json.loads(rep.to_json(include_meta=False))
    assert set(lean) == {
        "suite",
        "params",
        "graphs_checked",
        "violations",
        "equality_witnesses",
    }


def test_reports_identical_across_sharding():
    base = verify_order_size(5).to_json(include_meta=False)
    assert verify_order_size(5, shards=7).to_json(include_meta=False) == base
    assert verify_order_size(5, shards=3, jobs=3).to_json(include_meta=False) == base


def test_reports_identical_across_process_pool():
    base = verify_connectivity(6, 2).to_json(include_meta=False)
    pooled = verify_connectivity(6, 2, shards=4, jobs=2).to_json(include_meta=False)
    assert pooled == base


def test_passed_reflects_violations():
    rep = verify_order_size(4)
    assert rep.passed
    broken = VerificationReport.from_dict(
        rep.to_dict()
        | {
            "violations": [
                {
                    "graph6": "C~",
                    "kind": "dominance",
                    "coordinate": 0,
                    "lhs": "2",
                    "rhs": "1",
                    "index": None,
                }
            ]
        }
    )
    assert not broken.passed


def test_csv_summary_shape():
    reports = [verify_order_size(4), verify_deletion_bound(4)]
    text = csv_summary(reports)
    lines = text.strip().splitlines()
    assert lines[0] == (
        "suite,params,graphs_checked,violations,equality_witnesses,elapsed_s,shards"
    )
    assert len(lines) == 3
    assert lines[1].startswith("order_size,n=4,6,0,")
    assert lines[2].startswith("deletion,n=4,6,0,")
