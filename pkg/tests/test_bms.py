"""Diameter wrappers, their verification records, and corpus scanning."""

import json
import math

import pytest

import bei
from bei.bms import _expected_d3_distance

from conftest import connected_atlas


def test_diameter_class():
    assert bei.diameter_class(bei.complete_graph(5)) == bei.DiameterClass(1, True)
    assert bei.diameter_class(bei.gadget_d2(bei.path_graph(3))).k == 2
    assert bei.diameter_class(bei.gadget_d3(bei.complete_graph(2))).k == 3
    assert bei.diameter_class(bei.Graph(2)).k == math.inf


def test_verify_reduction_d2():
    for h in (bei.complete_graph(1), bei.complete_graph(2), bei.path_graph(4)):
        check = bei.verify_reduction_d2(h)
        assert check.diameter_ok and check.accessible_transfer_ok
        assert check.distance_cases_ok is None


def test_verify_reduction_d3():
    for h in (bei.complete_graph(2), bei.path_graph(3), bei.path_graph(4)):
        check = bei.verify_reduction_d3(h)
        assert check.diameter_ok
        assert check.accessible_transfer_ok
        assert check.distance_cases_ok


def test_verify_rejects_inaccessible_pendants():
    star = bei.Graph(4, [(0, 1), (0, 2), (0, 3)])  # not unmixed
    with pytest.raises(ValueError):
        bei.verify_reduction_d2(star)
    with pytest.raises(ValueError):
        bei.verify_reduction_d3(bei.cycle_graph(4))  # fails the system


def test_d3_distance_formula_matches_bfs_exhaustively():
    for h in connected_atlas(4):
        g = bei.gadget_d3(h)
        for u in range(g.n):
            du = bei.distances_from(g, u)
            for v in range(u + 1, g.n):
                assert du[v] == _expected_d3_distance(h, u, v)


def test_d3_distance_cases_spotchecks():
    h = bei.path_graph(3)
    hn = h.n
    # vertices in different pendant copies sit at distance 3
    assert _expected_d3_distance(h, 3, 3 + hn) == 3
    # same copy, non-adjacent: 2; same copy, adjacent: 1
    assert _expected_d3_distance(h, 3, 5) == 2
    assert _expected_d3_distance(h, 3, 4) == 1
    # the bare triangle vertex sits at distance 2 from every copy vertex
    assert _expected_d3_distance(h, 2, 4) == 2
    # a carrier and the opposite copy: 2
    assert _expected_d3_distance(h, 0, 3 + hn) == 2
    assert _expected_d3_distance(h, 0, 3) == 1


def scan_lines(graphs):
    return [bei.to_graph6(g) for g in graphs]


def test_scan_four_vertex_corpus():
    corpus = [g for g in connected_atlas(4) if g.n == 4]
    assert len(corpus) == 6
    records = list(bei.bms_scan(scan_lines(corpus), diameters={1, 2, 3}))
    assert len(records) == 6
    by_g6 = {r.graph6: r for r in records}
    k4 = by_g6[bei.to_graph6(bei.complete_graph(4))]
    assert k4.unmixed and k4.accessible and k4.diameter == 1
    for r in records:
        if r.accessible:
            assert r.unmixed


def test_scan_counterexample_record(square_leaves_product):
    records = list(bei.bms_scan([bei.to_graph6(square_leaves_product)]))
    assert len(records) == 1
    assert records[0].unmixed is False and records[0].accessible is False


def test_scan_empty_and_malformed():
    assert list(bei.bms_scan([])) == []
    errors = []
    records = list(
        bei.bms_scan(
            ["A_", "!!bad!!", "", "C~"],
            on_error=lambda lineno, msg: errors.append(lineno),
        )
    )
    assert [r.n for r in records] == [2, 4]
    assert errors == [2]


def test_scan_respects_filters():
    corpus = scan_lines(connected_atlas(4))
    only3 = list(bei.bms_scan(corpus, diameters={3}))
    assert all(r.diameter == 3 for r in only3)
    small = list(bei.bms_scan(corpus, max_n=3))
    assert all(r.n <= 3 for r in small)


def test_scan_bound_errors_reported():
    errors = []
    records = list(
        bei.bms_scan(
            [bei.to_graph6(bei.Graph(30))],
            bound=24,
            on_error=lambda lineno, msg: errors.append((lineno, msg)),
        )
    )
    assert records == [] and errors and "bound" in errors[0][1]


def test_scan_deterministic_and_order_preserving():
    corpus = scan_lines(connected_atlas(5))
    a = [json.dumps(r.to_json()) for r in bei.bms_scan(corpus)]
    b = [json.dumps(r.to_json()) for r in bei.bms_scan(corpus)]
    assert a == b
    assert [json.loads(line)["graph6"] for line in a] == corpus


def test_scan_parallel_matches_serial():
    corpus = scan_lines(connected_atlas(5))
    serial = [r.to_json() for r in bei.bms_scan(corpus)]
    parallel = [r.to_json() for r in bei.bms_scan(corpus, jobs=2)]
    assert serial == parallel


def test_scan_emits_scripts_for_accessible_graphs(tmp_path):
    corpus = scan_lines([bei.complete_graph(3), bei.cycle_graph(4)])
    records = list(bei.bms_scan(corpus, script_dir=str(tmp_path)))
    assert records[0].accessible and records[0].cas_script_path is not None
    text = (tmp_path / "000001.m2").read_text()
    assert "x1*y2-x2*y1" in text and "expected accessible = true" in text
    assert records[1].cas_script_path is None  # C4 is not accessible
