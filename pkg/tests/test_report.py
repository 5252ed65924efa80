import pytest

from factorweight.errors import MalformedInputError
from factorweight.graph import encode_graph6
from factorweight.report import Report, WitnessDoc
from factorweight.weighting import EdgeWeighting

from conftest import cycle_graph, k_complete


def test_factor_witness_roundtrip():
    g = k_complete(4)
    doc = WitnessDoc.for_factor(g, [[1, 2]] * 4, [(0, 1), (2, 3)])
    text = doc.render()
    assert WitnessDoc.parse(text) == doc
    assert WitnessDoc.parse(text).render() == text


def test_weighting_witness_roundtrip():
    g = cycle_graph(4)
    w = EdgeWeighting(weights={e: 1 + i % 2 for i, e in enumerate(g.edges)},
                      domain="integer", size=2)
    doc = WitnessDoc.for_weighting(g, w)
    assert WitnessDoc.parse(doc.render()) == doc
    assert doc.to_weighting() == w


def test_empty_payload_rendering():
    g = cycle_graph(4)
    doc = WitnessDoc.for_factor(g, [[0]] * 4, [])
    text = doc.render()
    assert "edges: -" in text
    assert WitnessDoc.parse(text).edges == ()


def test_witness_requires_kind_and_graph():
    with pytest.raises(MalformedInputError):
        WitnessDoc.parse("edges: 0-1\n")


def test_report_refuses_witness_with_failing_check():
    g = cycle_graph(4)
    doc = WitnessDoc.for_factor(g, [[1]] * 4, [(0, 1), (2, 3)])
    report = Report(command="x", graph=g, verdict="feasible", witness=doc)
    report.add_check("something", False)
    with pytest.raises(AssertionError):
        report.render()


def test_report_field_order_is_stable():
    g = cycle_graph(4)
    report = Report(command="factorweight demo", graph=g, verdict="feasible")
    report.add_check("a", True)
    lines = report.render().splitlines()
    keys = [line.split(":")[0] for line in lines]
    assert keys == ["command", "input.vertices", "input.edges",
                    "input.degree-histogram", "input.isolated",
                    "verdict", "check.a", "time-ms"]


def test_degree_histogram_content():
    g = k_complete(4)
    report = Report(command="c", graph=g, verdict="v")
    assert "input.degree-histogram: 3:4" in report.render()
    assert f"graph6: {encode_graph6(g)}" in WitnessDoc.for_factor(g, [[1]] * 4, []).render()
