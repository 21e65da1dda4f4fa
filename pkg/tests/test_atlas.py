import json

import pytest

from wellhued.atlas import (
    ROW_FLAGS,
    THEOREM_IDS,
    clique_partition_min2,
    compute_row,
    report_to_jsonl,
    report_to_tsv,
    search,
    spanning_subgraphs,
    verify_theorem,
)
from wellhued.graph import (
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_connected_nonisomorphic,
    from_graph6,
    path_graph,
)

OCTAHEDRON = from_graph6("E]~o")


# --- clique partitions ---------------------------------------------------------


def test_clique_partition_min2():
    parts = clique_partition_min2(complete_graph(4))
    assert parts is not None
    covered = 0
    for p in parts:
        assert p.bit_count() >= 2
        assert not covered & p
        covered |= p
    assert covered == 0b1111
    assert clique_partition_min2(cycle_graph(5)) is None
    assert clique_partition_min2(cycle_graph(4)) == [0b0011, 0b1100]
    assert clique_partition_min2(empty_graph(0)) == []
    assert clique_partition_min2(empty_graph(2)) is None


# --- search rows ------------------------------------------------------------------


def test_compute_row_octahedron():
    row = compute_row(OCTAHEDRON)
    assert row.sequence == (2, 4, 6)
    assert row.connected and row.well_hued and row.well_equi_hued
    assert row.cograph and row.complement_well_hued
    assert row.thm222 and not row.thm_2k1 and not row.thm_3k
    assert not row.corona_of_complete and row.corona_clique_order is None
    assert row.clique_partition_min2
    assert row.degree_sequence == (4,) * 6


def test_compute_row_corona():
    from wellhued.graph import corona

    row = compute_row(corona(complete_graph(3)))
    assert row.sequence == (3, 5, 6)
    assert row.corona_of_complete and row.corona_clique_order == 3
    assert not row.well_equi_hued


def test_search_filters_and_ordering():
    universe = list(enumerate_connected_nonisomorphic(4))
    report = search(universe, ["well_hued"], universe_label="connected n = 4")
    assert report.universe == "connected n = 4"
    assert all(r.well_hued for r in report.rows)
    keys = [r.sort_key() for r in report.rows]
    assert keys == sorted(keys)
    with pytest.raises(ValueError):
        search(universe, ["nonsense"])


def test_search_workers_agree():
    universe = list(enumerate_connected_nonisomorphic(5))
    serial = search(universe, ["well_hued"], workers=1)
    parallel = search(universe, ["well_hued"], workers=2)
    assert [r.g6 for r in serial.rows] == [r.g6 for r in parallel.rows]


def test_report_serialization():
    report = search(list(enumerate_connected_nonisomorphic(3)), [])
    tsv = report_to_tsv(report)
    lines = tsv.strip().split("\n")
    assert lines[0].startswith("# universe=")
    assert lines[1].split("\t")[:5] == ["g6", "n", "m", "degree_sequence", "sequence"]
    assert len(lines) == 2 + len(report.rows)
    jsonl = report_to_jsonl(report)
    objs = [json.loads(ln) for ln in jsonl.strip().split("\n")]
    assert "universe" in objs[0]
    for obj in objs[1:]:
        assert set(ROW_FLAGS) <= set(obj)


# --- verification harnesses ----------------------------------------------------------


def test_spanning_subgraph_count():
    subs = list(spanning_subgraphs(path_graph(3)))
    assert len(subs) == 4
    assert all(g.order == 3 for g in subs)


def test_verify_small_scopes():
    r = verify_theorem("thm32", max_order=5)
    assert r.verified and r.instances == 31
    r = verify_theorem("thm222", parts=[2, 2])
    assert r.verified and r.instances == 5
    r = verify_theorem("thm2k1", max_order=5)
    assert r.verified and r.instances == 21
    r = verify_theorem("cotree_iff", max_order=5)
    assert r.verified and r.instances > 0
    r = verify_theorem("complement_closure", max_order=5)
    assert r.verified
    r = verify_theorem("homogeneous", max_order=5)
    assert r.verified
    r = verify_theorem("join_union", max_order=5)
    assert r.verified
    js = r.to_json()
    assert js["verified"] is True and js["counterexamples"] == []
    with pytest.raises(ValueError):
        verify_theorem("thm99")
    assert "thm32" in THEOREM_IDS
