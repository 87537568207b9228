from pathlib import Path

import pytest

from foldchi import dot, graphio
from foldchi.foldcore import Codim, make_graph
from foldchi.plumbing import Mat2Z, build_plumbing_graph

HERE = Path(__file__).parent
FIX = HERE / "fixtures"
GOLD = HERE / "golden"


def d4():
    return graphio.parse_target_graph_json((FIX / "d4.json").read_text())


def test_d4_golden():
    assert dot.emit_dot(d4()) == (GOLD / "d4.dot").read_text()


def test_plumbing_golden():
    pg = build_plumbing_graph(2, 3, [Mat2Z(1, -2, 0, -1)])
    assert dot.emit_dot(pg) == (GOLD / "plumb_g2_b3.dot").read_text()


def test_repeatable():
    assert dot.emit_dot(d4()) == dot.emit_dot(d4())


def test_edge_order_irrelevant():
    edges = [("r", "a", "min+", 0), ("r", "b", "max-", 2), ("a", "c", "max+", 0)]
    g1 = make_graph(5, 2, {"r": 0, "a": 1, "b": 1, "c": 1}, "r", edges)
    g2 = make_graph(5, 2, {"c": 1, "b": 1, "a": 1, "r": 0}, "r", list(reversed(edges)))
    assert dot.emit_dot(g1) == dot.emit_dot(g2)


def test_single_vertex():
    text = dot.emit_dot(make_graph(4, 2, {"v0": 2}, "v0", []))
    assert "->" not in text
    assert '"v0" [label="v0\\ndepth 0, chiR 2", shape=doublecircle];' in text


def test_max_index_rendered():
    text = dot.emit_dot(make_graph(6, 2, {"v0": 0, "v1": 1}, "v0", [("v0", "v1", "max-", 0)]))
    assert 'label="(3,-), chiS 0"' in text


def test_quotes_escaped():
    text = dot.emit_dot(make_graph(4, 2, {'a"b': 0}, 'a"b', []))
    assert '"a\\"b"' in text


def test_plumbing_counts():
    text = dot.emit_dot(build_plumbing_graph(2, 3, []))
    assert 'center [label="[2]", xlabel="0"];' in text
    assert text.count("arrowhead=normal") == 3


def test_chain_shape():
    pg = build_plumbing_graph(1, 2, [Mat2Z(-1, 0, -1, 1)])
    text = dot.emit_dot(pg)
    assert "center -> t1_1;" in text and "t1_1 -> t1_2;" in text


def test_rejects_other_objects():
    with pytest.raises(TypeError):
        dot.emit_dot(Codim(4, 2))
