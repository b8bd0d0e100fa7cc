from fractions import Fraction

import pytest

from linesat import io as formats
from linesat.errors import FormatError, TriangleViolation
from linesat.hypergraph import star_construction, theta_graph
from linesat.lines import LinearOrder
from linesat.metric import four_cycle_metric, random_rational_metric
from linesat.realizability import is_metric_hypergraph, nineteen_edge_hypergraph
from linesat.saturation import weak_saturation_closure


def test_matrix_roundtrip():
    d = random_rational_metric(6, 3)
    text = formats.dumps_matrix(d)
    assert formats.loads_matrix(text).d == d.d


def test_matrix_fraction_entries_as_strings():
    d = formats.loads_matrix('{"n":2,"dist":[[0,"1/2"],["1/2",0]]}')
    assert d.dist(0, 1) == Fraction(1, 2)


def test_matrix_writer_is_deterministic():
    d = four_cycle_metric()
    assert formats.dumps_matrix(d) == formats.dumps_matrix(d)


def test_matrix_rejects_floats():
    with pytest.raises(FormatError):
        formats.loads_matrix('{"n":2,"dist":[[0,0.5],[0.5,0]]}')


def test_matrix_rejects_non_metric():
    text = '{"n":3,"dist":[[0,1,3],[1,0,1],[3,1,0]]}'
    with pytest.raises(TriangleViolation):
        formats.loads_matrix(text)
    d = formats.loads_matrix(text, validate=False)
    assert d.dist(0, 2) == 3


def test_matrix_rejects_asymmetric_shape():
    with pytest.raises(FormatError):
        formats.loads_matrix('{"n":2,"dist":[[0,1]]}')


def test_matrix_csv_roundtrip():
    d = random_rational_metric(5, 9)
    text = formats.dumps_matrix_csv(d)
    assert formats.loads_matrix_csv(text).d == d.d


def test_graph_roundtrip():
    g = theta_graph(7)
    assert formats.loads_graph(formats.dumps_graph(g)).edges == g.edges


def test_graph_rejects_duplicate_edges():
    with pytest.raises(FormatError):
        formats.loads_graph('{"n":3,"edges":[[0,1],[1,0]]}')


def test_hypergraph_roundtrip_in_colex_order():
    h = star_construction(7)
    text = formats.dumps_hypergraph(h)
    again = formats.loads_hypergraph(text)
    assert again.edges == h.edges
    assert formats.dumps_hypergraph(again) == text


def test_hypergraph_rejects_wrong_arity():
    with pytest.raises(FormatError):
        formats.loads_hypergraph('{"n":5,"r":3,"edges":[[0,1]]}')


def test_certificate_roundtrip():
    cert = weak_saturation_closure(star_construction(7), 6).certificate
    text = formats.dumps_certificate(cert)
    again = formats.loads_certificate(text)
    assert again.base.edges == cert.base.edges
    assert again.k == cert.k
    assert again.steps == cert.steps
    assert formats.dumps_certificate(again) == text


def test_order_roundtrip():
    o = LinearOrder((2, 0, 1))
    assert formats.loads_order(formats.dumps_order(o)).order == o.order


def test_verdict_serialization():
    verdict = is_metric_hypergraph(nineteen_edge_hypergraph())
    text = formats.dumps_verdict(verdict)
    assert '"status":"non-metric"' in text
    assert '"witness":null' in text
