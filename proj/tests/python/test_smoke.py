import pytest

import hjump


def test_graph_basics():
    g = hjump.Graph(3, [(0, 1), (1, 2)])
    assert g.vertex_count == 3
    assert g.edge_count == 2
    assert g.has_edge(1, 0)
    assert g.edges() == [(0, 1), (1, 2)]
    assert hjump.read_graph(hjump.write_graph(g)) == g


def test_catalog_counts():
    assert [len(hjump.enumerate_graphs(p)) for p in range(1, 6)] == [1, 2, 4, 11, 34]


def test_decisions():
    k5 = hjump.decide_cos(hjump.Graph.complete(5), 2)
    assert k5["yes"]
    assert k5["forbidden"] == hjump.Graph(2)
    assert not hjump.decide_scos(hjump.encode_longhand(hjump.Graph.complete(2)))["yes"]
    assert hjump.decide_cpos(hjump.Graph.complete(2), 3, [1, 2], [2, 1])["yes"]
    assert hjump.sigma2_decide(hjump.Graph.complete(5), 2)


def test_reductions():
    out, provenance = hjump.reduce_3col(hjump.Graph.complete(3), 4)
    assert out.vertex_count == 48
    assert '"H11"' in provenance
    assert hjump.decide_cos(out, 4)["yes"]
    k4, _ = hjump.reduce_3col(hjump.Graph.complete(4), 4)
    assert not hjump.decide_cos(k4, 4)["yes"]
    g, alpha, beta = hjump.reduce_4cp(hjump.Graph.complete(2), [1, 2], [1, 2], 5)
    assert hjump.is_proper(g, 5, alpha)
    circuit = hjump.reduce_succinct("(vars 4)\n(out false)\n")
    assert circuit.startswith("(vars 12)")


def test_circuits_and_reconfiguration():
    text = hjump.encode_longhand(hjump.Graph.complete(2))
    assert hjump.eval_circuit(text, [1, 0, 0, 1])
    assert hjump.materialize(text).edge_count == 1
    k3 = hjump.Graph.complete(3)
    assert hjump.frozen_vertices(k3, 3, [1, 2, 3]) == [0, 1, 2]
    assert not hjump.path_exists(k3, 3, [1, 2, 3], [2, 1, 3])
    ok, reason = hjump.validate_path(hjump.Graph.complete(2), 3, [1, 2], [2, 1], [[1, 2], [2, 1]])
    assert not ok and "exactly one vertex" in reason


def test_errors():
    with pytest.raises(hjump.ParseError):
        hjump.materialize("(vars 3) (out true)")
    with pytest.raises(hjump.ResourceError):
        hjump.enumerate_graphs(9)
    with pytest.raises(hjump.Error):
        hjump.param_p(1)


def test_verify_suite():
    report = hjump.verify("sigma2", max_n=3)
    assert report["cases"] > 0
    assert report["passed"] == report["cases"]
