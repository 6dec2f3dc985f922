import pytest

import oracles
from turanlab.canon import canonical_form
from turanlab.counting import count_copies
from turanlab.enumeration import (
    EnumerationCapError,
    cache_filename,
    enumerate_f_free,
    enumerate_graphs,
    generalized_turan,
    turan_good_scan,
)
from turanlab.graph import GraphError, empty_graph, is_subgraph
from turanlab.graph6 import graph6_decode, graph6_encode, read_graph6_file
from turanlab.presets import complete, cycle, path
from turanlab.turan import complete_multipartite, turan_graph

CLASS_COUNTS = {n: oracles.burnside_class_count(n) for n in range(1, 8)}


@pytest.mark.parametrize("n", range(1, 8))
def test_class_counts(n):
    graphs = list(enumerate_graphs(n))
    assert len(graphs) == CLASS_COUNTS[n]
    assert len({canonical_form(G) for G in graphs}) == len(graphs)


@pytest.mark.parametrize("n", range(1, 6))
def test_same_classes_as_brute_force(n):
    ours = {canonical_form(G) for G in enumerate_graphs(n)}
    assert ours == {canonical_form(G) for G in oracles.brute_force_classes(n)}


def test_outputs_are_canonical():
    for G in enumerate_graphs(6):
        assert graph6_encode(G) == canonical_form(G)


def test_f_free_examples():
    assert len(list(enumerate_f_free(4, complete(3)))) == 7
    three = {canonical_form(G) for G in enumerate_f_free(3, complete(3))}
    assert three == {canonical_form(G) for G in (empty_graph(3), path(2).add_vertex(0), path(3))}
    for n in range(1, 7):
        assert [G.num_edges for G in enumerate_f_free(n, path(2))] == [0]


@pytest.mark.parametrize("F", [complete(3), cycle(4), path(4), complete_multipartite([1, 3]), cycle(5)])
def test_f_free_equals_filtered_enumeration(F):
    for n in range(1, 8):
        filtered = {canonical_form(G) for G in enumerate_graphs(n) if not is_subgraph(F, G)}
        assert {canonical_form(G) for G in enumerate_f_free(n, F)} == filtered


def test_caps():
    with pytest.raises(EnumerationCapError):
        list(enumerate_graphs(10))
    with pytest.raises(EnumerationCapError):
        list(enumerate_graphs(11, allow_large=True))
    with pytest.raises(EnumerationCapError):
        list(enumerate_f_free(11, complete(3)))
    with pytest.raises(GraphError):
        list(enumerate_f_free(4, empty_graph(3)))


def test_parallel_generation_is_identical():
    serial = [graph6_encode(G) for G in enumerate_f_free(8, complete(3))]
    parallel = [graph6_encode(G) for G in enumerate_f_free(8, complete(3), workers=3)]
    assert serial == parallel


def test_cache_round_trip(tmp_path):
    first = [graph6_encode(G) for G in enumerate_f_free(7, complete(3), cache_dir=tmp_path)]
    path7 = tmp_path / cache_filename(7, complete(3))
    assert path7.is_file()
    raw = path7.read_bytes()
    assert raw == b"".join(c + b"\n" for c in first)
    again = [graph6_encode(G) for G in enumerate_f_free(7, complete(3), cache_dir=tmp_path)]
    assert again == first
    assert path7.read_bytes() == raw
    assert [graph6_encode(G) for G in read_graph6_file(path7)] == first
    # a deeper level resumes from the cached one
    assert len(list(enumerate_f_free(8, complete(3), cache_dir=tmp_path))) == 410
    assert cache_filename(5, None) == "5_all.g6"


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("TURANLAB_CACHE_DIR", str(tmp_path))
    list(enumerate_graphs(4))
    assert (tmp_path / "4_all.g6").is_file()


def test_generalized_turan_examples():
    r4 = generalized_turan(4, path(3), complete(3))
    assert r4.ex_value == 4 and r4.turan_is_unique
    assert r4.extremal_graphs == [canonical_form(cycle(4)).decode()]
    r5 = generalized_turan(5, path(3), complete(3))
    assert r5.ex_value == 9 and r5.turan_is_unique
    assert r5.extremal_graphs == [canonical_form(turan_graph(5, 2)).decode()]
    r3 = generalized_turan(3, path(2), complete(3))
    assert r3.ex_value == 2 == r3.turan_value


def _check_scan(scan, H, F):
    for rep in scan.reports:
        assert rep.ex_value >= rep.turan_value
        assert rep.turan_is_extremal == (rep.ex_value == rep.turan_value)
        forms = set()
        for code in rep.extremal_graphs:
            G = graph6_decode(code)
            assert graph6_encode(G).decode() == code
            assert not is_subgraph(F, G)
            assert count_copies(H, G) == rep.ex_value
            forms.add(canonical_form(G))
        assert len(forms) == rep.extremal_count
    assert scan.monotone


def test_scan_p3_k3():
    scan = turan_good_scan(path(3), complete(3), range(4, 9))
    _check_scan(scan, path(3), complete(3))
    assert all(r.turan_is_unique for r in scan.reports)
    assert scan.unique_from == 4


def test_scan_p4_k4_records_table():
    scan = turan_good_scan(path(4), complete(4), range(5, 9))
    _check_scan(scan, path(4), complete(4))
    assert [r.n for r in scan.reports] == [5, 6, 7, 8]


def test_scan_k2_c5_findings():
    scan = turan_good_scan(path(2), cycle(5), range(5, 9))
    _check_scan(scan, path(2), cycle(5))
    assert [r.turan_value for r in scan.reports] == [6, 9, 12, 16]
    assert scan.reports[0].ex_value == 7  # K4 plus a pendant edge
    assert scan.unique_from == 8


def test_parallel_report_identical():
    a = generalized_turan(8, path(4), complete(3))
    b = generalized_turan(8, path(4), complete(3), workers=3)
    a.wall_ms = b.wall_ms = 0
    assert a == b
