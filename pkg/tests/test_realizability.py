import random
from itertools import combinations, product

import pytest

from linesat.errors import CeilingExceeded, InconsistentAssignment
from linesat.hypergraph import (
    UniformHypergraph,
    complete_hypergraph,
    delete_vertex,
)
from linesat.metric import degenerate_hypergraph, graph_metric, middle_of, validate_metric
from linesat.hypergraph import theta_graph
from linesat.realizability import (
    MiddleAssignment,
    is_metric_hypergraph,
    lp_max_slack,
    minimal_nonmetric_audit,
    nineteen_edge_hypergraph,
    propagate,
)


def brute_force_witness(h):
    """Independent oracle: try the slack program on every total assignment."""
    edges = h.edge_list()
    for choice in product(*edges):
        a = MiddleAssignment(h, dict(zip(edges, choice)))
        try:
            witness = lp_max_slack(a, h)
        except InconsistentAssignment:
            continue
        if witness is not None:
            return witness
    return None


def relabel(h, perm):
    return UniformHypergraph.from_edges(
        h.n, h.r, [tuple(perm[v] for v in e) for e in h.edge_list()]
    )


# --- propagation ----------------------------------------------------------------


def test_collinear_assignment_is_consistent():
    h = complete_hypergraph(5, 3)
    middles = {t: t[1] for t in combinations(range(5), 3)}
    a = MiddleAssignment(h, middles)
    assert propagate(a, h)


def test_rule_forces_non_edge_degenerate():
    # [0 1 2] and [0 2 3] force [0 1 3]; that triple is not an edge
    h = UniformHypergraph.from_edges(4, 3, [(0, 1, 2), (0, 2, 3)])
    a = MiddleAssignment(h, {(0, 1, 2): 1, (0, 2, 3): 2})
    assert not propagate(a, h)


def test_empty_assignment_is_consistent():
    h = UniformHypergraph(4, 3, 0)
    assert propagate(MiddleAssignment(h), h)


def test_rule_chains_through_edges():
    # on the complete hypergraph, [0 1 2] and [0 2 3] force the middles of
    # both remaining triples, pinning the collinear order 0 1 2 3
    h = complete_hypergraph(4, 3)
    a = MiddleAssignment(h, {(0, 1, 2): 1, (0, 2, 3): 2})
    assert propagate(a, h)
    assert a.chosen_middles() == {
        (0, 1, 2): 1,
        (0, 1, 3): 1,
        (0, 2, 3): 2,
        (1, 2, 3): 2,
    }


def test_contradiction_when_forced_middle_is_contested():
    h = complete_hypergraph(4, 3)
    a = MiddleAssignment(h, {(0, 1, 2): 1, (0, 2, 3): 2})
    propagate(a, h)
    a.choose((0, 1, 3), 0)  # but 1 is already forced as the middle
    assert not propagate(a, h)


def test_contradiction_dooms_every_completion():
    # once propagation reports contradiction, no completion is feasible
    h = UniformHypergraph.from_edges(4, 3, [(0, 1, 2), (0, 2, 3), (1, 2, 3)])
    partial = {(0, 1, 2): 1, (0, 2, 3): 2}
    a = MiddleAssignment(h, partial)
    assert not propagate(a, h)
    for third in (1, 2, 3):
        total = dict(partial)
        total[(1, 2, 3)] = third
        b = MiddleAssignment(h, total)
        try:
            assert lp_max_slack(b, h) is None
        except InconsistentAssignment:
            pass


def test_contradiction_soundness_on_five_points():
    # [0 1 2] and [0 2 4] force [0 1 4], which is kept out of the edge set;
    # the slack program must reject every completion of the two choices
    h = UniformHypergraph.from_edges(
        5, 3, [(0, 1, 2), (0, 2, 4), (1, 2, 3), (2, 3, 4)]
    )
    partial = {(0, 1, 2): 1, (0, 2, 4): 2}
    a = MiddleAssignment(h, partial)
    assert not propagate(a, h)
    free_edges = [(1, 2, 3), (2, 3, 4)]
    for m1 in free_edges[0]:
        for m2 in free_edges[1]:
            total = dict(partial)
            total[free_edges[0]] = m1
            total[free_edges[1]] = m2
            b = MiddleAssignment(h, total)
            try:
                assert lp_max_slack(b, h) is None
            except InconsistentAssignment:
                pass


# --- the slack program -------------------------------------------------------------


def test_collinear_assignment_yields_line_witness():
    h = complete_hypergraph(5, 3)
    a = MiddleAssignment(h, {t: t[1] for t in combinations(range(5), 3)})
    propagate(a, h)
    witness = lp_max_slack(a, h)
    assert witness is not None
    assert degenerate_hypergraph(witness).is_complete()


def test_theta_five_assignment_yields_witness():
    d = graph_metric(theta_graph(5))
    h = degenerate_hypergraph(d)
    middles = {e: middle_of(d, e) for e in h.edge_list()}
    a = MiddleAssignment(h, middles)
    assert propagate(a, h)
    witness = lp_max_slack(a, h)
    assert witness is not None
    assert degenerate_hypergraph(witness).edges == h.edges


def test_lp_rejects_partial_assignment():
    h = complete_hypergraph(5, 3)
    a = MiddleAssignment(h, {(0, 1, 2): 1})
    with pytest.raises(ValueError):
        lp_max_slack(a, h)


# --- full decision ---------------------------------------------------------------------


def test_complete_five_is_metric():
    verdict = is_metric_hypergraph(complete_hypergraph(5, 3))
    assert verdict.status == "metric"
    validate_metric(verdict.witness)
    assert degenerate_hypergraph(verdict.witness).is_complete()


def test_empty_three_is_metric():
    verdict = is_metric_hypergraph(UniformHypergraph(3, 3, 0))
    assert verdict.status == "metric"
    assert degenerate_hypergraph(verdict.witness).edge_count == 0


def test_complete_four_is_metric():
    # all triangles degenerate on four points: realizable even though no
    # linear order exists
    verdict = is_metric_hypergraph(complete_hypergraph(4, 3))
    assert verdict.status == "metric"
    assert degenerate_hypergraph(verdict.witness).is_complete()


def test_nineteen_edge_hypergraph_is_non_metric():
    verdict = is_metric_hypergraph(nineteen_edge_hypergraph())
    assert verdict.status == "non-metric"
    assert verdict.witness is None
    assert verdict.explored > 0


def test_verdicts_invariant_under_relabeling():
    rng = random.Random(0)
    h19 = nineteen_edge_hypergraph()
    for _ in range(3):
        perm = list(range(6))
        rng.shuffle(perm)
        assert is_metric_hypergraph(relabel(h19, perm)).status == "non-metric"
    d = graph_metric(theta_graph(5))
    h9 = degenerate_hypergraph(d)
    for _ in range(3):
        perm = list(range(5))
        rng.shuffle(perm)
        assert is_metric_hypergraph(relabel(h9, perm)).status == "metric"


def test_verdict_deterministic():
    h = degenerate_hypergraph(graph_metric(theta_graph(5)))
    a = is_metric_hypergraph(h)
    b = is_metric_hypergraph(h)
    assert a.explored == b.explored
    assert a.witness.d == b.witness.d


def test_witness_pattern_is_exact():
    # bit-for-bit agreement between requested and realized degeneracies
    for h in (
        degenerate_hypergraph(graph_metric(theta_graph(5))),
        complete_hypergraph(4, 3),
        UniformHypergraph.from_edges(4, 3, [(0, 1, 2)]),
    ):
        verdict = is_metric_hypergraph(h)
        assert verdict.status == "metric"
        assert degenerate_hypergraph(verdict.witness).edges == h.edges


def test_ceiling_guard():
    with pytest.raises(CeilingExceeded):
        is_metric_hypergraph(complete_hypergraph(7, 3))


def test_search_matches_brute_force_on_small_instances():
    rng = random.Random(12)
    cases = [
        UniformHypergraph(4, 3, 0),
        UniformHypergraph.from_edges(4, 3, [(0, 1, 2)]),
        UniformHypergraph.from_edges(4, 3, [(0, 1, 2), (0, 2, 3)]),
        complete_hypergraph(4, 3),
    ]
    for _ in range(4):
        mask = rng.randrange(1 << 10)
        cases.append(UniformHypergraph(5, 3, mask & ((1 << 10) - 1)))
    for h in cases:
        if h.edge_count > 6:
            continue
        fast = is_metric_hypergraph(h)
        slow = brute_force_witness(h)
        assert (fast.status == "metric") == (slow is not None)
        if slow is not None:
            assert degenerate_hypergraph(slow).edges == h.edges


# --- the minimality audit -------------------------------------------------------------


def test_audit_shape_and_witnesses():
    report = minimal_nonmetric_audit()
    assert report.root.edge_count == 19
    assert report.root.verdict.status == "non-metric"
    assert report.is_minimal_non_metric()
    root = nineteen_edge_hypergraph()
    sizes = []
    for entry in report.deletions:
        sizes.append(entry.edge_count)
        expected = delete_vertex(root, entry.deleted_vertex)
        assert entry.verdict.status == "metric"
        witness = entry.verdict.witness
        validate_metric(witness)
        assert degenerate_hypergraph(witness).edges == expected.edges
    # the missing triple {3,4,5}: deleting inside it leaves the complete
    # 10-edge hypergraph, deleting outside leaves 9 edges
    assert sizes == [9, 9, 9, 10, 10, 10]
