"""Deciding whether a 3-uniform hypergraph is the degenerate-triangle set
of some metric space.

A realizing metric assigns every hyperedge a unique middle point, so the
search branches over middle assignments.  After each choice the betweenness
state is closed under the propagation rule ([abc] and [acd] force [abd] and
[bcd]) and under exclusivity; a branch dies when a non-edge is forced
degenerate, an edge loses all three candidate middles, or a triple gets two
middles.  Surviving total assignments go to an exact LP that maximizes a
uniform slack: distances are feasible with positive slack exactly when a
metric with the required degeneracy pattern exists, because the pattern is
scale-invariant.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import CeilingExceeded, InconsistentAssignment, InternalConsistencyError
from .hypergraph import (
    UniformHypergraph,
    delete_vertex,
    full_edge_mask,
    rank,
    unrank,
)
from .metric import DistanceMatrix, degenerate_hypergraph, validate_metric
from .simplex import linprog_max, solve_linear_system

OPEN, TRUE, FALSE = 0, 1, 2

DEFAULT_CEILING = 6


class MiddleAssignment:
    """Choice of middles for hyperedges plus the derived betweenness state.

    For every triple T and candidate middle s the state records whether the
    placement "s between the other two" is forced true, forced false, or
    open.  Non-edges start with all three placements false; choosing a
    middle for an edge forces its other two placements false.
    """

    def __init__(self, h: UniformHypergraph, middles=None):
        if h.r != 3:
            raise ValueError("middle assignments are defined for 3-uniform hypergraphs")
        self.hypergraph = h
        self.n = h.n
        self.state = bytearray(3 * comb(h.n, 3))
        self.contradiction = False
        self._true_facts: list[tuple[int, tuple[int, int]]] = []  # (middle, ends)
        self._queue: list[tuple[int, tuple[int, int]]] = []
        self._processed = 0
        for t_rank in range(comb(h.n, 3)):
            if not h.edges >> t_rank & 1:
                base = 3 * t_rank
                self.state[base] = FALSE
                self.state[base + 1] = FALSE
                self.state[base + 2] = FALSE
        if middles:
            for triple, m in sorted(middles.items()):
                self.choose(triple, m)

    def clone(self) -> "MiddleAssignment":
        twin = object.__new__(MiddleAssignment)
        twin.hypergraph = self.hypergraph
        twin.n = self.n
        twin.state = bytearray(self.state)
        twin.contradiction = self.contradiction
        twin._true_facts = list(self._true_facts)
        twin._queue = list(self._queue)
        twin._processed = self._processed
        return twin

    def _slot(self, triple, m):
        t = tuple(sorted(triple))
        return 3 * rank(t, self.n) + t.index(m), t

    def state_of(self, triple, m) -> str:
        slot, _ = self._slot(triple, m)
        return ("open", "true", "false")[self.state[slot]]

    def choose(self, triple, m) -> None:
        """Record that m is the middle of the given edge (queued for propagation)."""
        t = tuple(sorted(triple))
        if m not in t:
            raise ValueError(f"{m} is not a member of {t}")
        if not self.hypergraph.has_edge(t):
            raise ValueError(f"{t} is not a hyperedge")
        self._set_true(t, m)

    def _set_true(self, t, m):
        if self.contradiction:
            return
        base = 3 * rank(t, self.n)
        pos = t.index(m)
        cur = self.state[base + pos]
        if cur == TRUE:
            return
        if cur == FALSE:
            self.contradiction = True
            return
        self.state[base + pos] = TRUE
        ends = tuple(x for x in t if x != m)
        self._true_facts.append((m, ends))
        self._queue.append((m, ends))
        for other in t:
            if other != m:
                self._set_false(t, other)

    def _set_false(self, t, m):
        if self.contradiction:
            return
        base = 3 * rank(t, self.n)
        pos = t.index(m)
        cur = self.state[base + pos]
        if cur == FALSE:
            return
        if cur == TRUE:
            self.contradiction = True
            return
        self.state[base + pos] = FALSE
        if self.hypergraph.has_edge(t):
            states = self.state[base : base + 3]
            if all(s == FALSE for s in states):
                self.contradiction = True  # an edge must stay degenerate
            elif sum(1 for s in states if s == FALSE) == 2 and TRUE not in states:
                open_pos = next(i for i in range(3) if states[i] == OPEN)
                self._set_true(t, t[open_pos])

    def chosen_middles(self) -> dict[tuple[int, ...], int]:
        """Edges whose middle is currently forced true."""
        out = {}
        for edge in self.hypergraph.edge_list():
            base = 3 * rank(edge, self.n)
            for pos in range(3):
                if self.state[base + pos] == TRUE:
                    out[edge] = edge[pos]
        return out

    def is_total(self) -> bool:
        for edge in self.hypergraph.edge_list():
            base = 3 * rank(edge, self.n)
            if not any(self.state[base + pos] == TRUE for pos in range(3)):
                return False
        return True


def propagate(a: MiddleAssignment, h: UniformHypergraph | None = None) -> bool:
    """Close the assignment under the 4-point rule; True iff still consistent.

    The rule instantiates over every pair of true facts sharing an end pair:
    [abc] with [acd] forces [abd] and [bcd].  Conclusions feed back into the
    queue until a fixed point or a contradiction.
    """
    if h is not None and h != a.hypergraph:
        raise ValueError("assignment belongs to a different hypergraph")
    while a._processed < len(a._queue) and not a.contradiction:
        fact = a._queue[a._processed]
        a._processed += 1
        for other in list(a._true_facts):
            if other == fact:
                continue
            _apply_rule(a, fact, other)
            if a.contradiction:
                break
            _apply_rule(a, other, fact)
            if a.contradiction:
                break
    return not a.contradiction


def _apply_rule(a, first, second):
    # first = [alpha beta gamma], second = [alpha gamma delta]
    beta, ends1 = first
    gamma2, ends2 = second
    for alpha, gamma in (ends1, (ends1[1], ends1[0])):
        if gamma != gamma2:
            continue
        if alpha == ends2[0]:
            delta = ends2[1]
        elif alpha == ends2[1]:
            delta = ends2[0]
        else:
            continue
        if beta == delta:
            continue
        a._set_true(tuple(sorted((alpha, beta, delta))), beta)
        if a.contradiction:
            return
        a._set_true(tuple(sorted((beta, gamma, delta))), gamma)
        if a.contradiction:
            return


@dataclass(frozen=True)
class RealizabilityVerdict:
    status: str  # "metric" | "non-metric"
    witness: DistanceMatrix | None
    explored: int


def lp_max_slack(a: MiddleAssignment, h: UniformHypergraph) -> DistanceMatrix | None:
    """Maximize the uniform slack over metrics realizing a total assignment.

    Equalities pin each edge's middle; every placement of every non-edge,
    and every distance, must clear the slack; distances are normalized to
    sum to one, which is harmless because the degeneracy pattern is
    scale-invariant.  Returns an exact witness when the optimum slack is
    positive, None otherwise.  Raises InconsistentAssignment when the
    equality system itself admits no normalized solution.
    """
    n = h.n
    middles = a.chosen_middles()
    if a.contradiction or len(middles) != h.edge_count:
        raise ValueError("assignment must be total and propagation-consistent")
    pairs = list(combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    nvars = len(pairs)

    def pair(i, j):
        return pidx[(i, j) if i < j else (j, i)]

    eq_rows = []
    eq_rhs = []
    for edge in sorted(middles):
        m = middles[edge]
        lo, hi = (x for x in edge if x != m)
        row = [0] * nvars
        row[pair(lo, m)] += 1
        row[pair(m, hi)] += 1
        row[pair(lo, hi)] -= 1
        eq_rows.append(row)
        eq_rhs.append(0)
    eq_rows.append([1] * nvars)
    eq_rhs.append(1)
    solved = solve_linear_system(eq_rows, eq_rhs)
    if solved is None:
        raise InconsistentAssignment(
            "the middle equalities admit no normalized distance solution"
        )
    x0, nullspace = solved
    strict_rows = []
    for t_rank in range(comb(n, 3)):
        if h.edges >> t_rank & 1:
            continue
        triple = unrank(t_rank, n, 3)
        for m in triple:
            lo, hi = (x for x in triple if x != m)
            row = [Fraction(0)] * nvars
            row[pair(lo, m)] += 1
            row[pair(m, hi)] += 1
            row[pair(lo, hi)] -= 1
            strict_rows.append(row)
    for p in range(nvars):
        row = [Fraction(0)] * nvars
        row[p] = Fraction(1)
        strict_rows.append(row)
    # Substitute d = x0 + N y and solve over (y split into +/- parts, slack
    # split likewise): maximize eps subject to a.(x0 + N y) >= eps.
    dim = len(nullspace)
    ge_rows = []
    ge_rhs = []
    for row in strict_rows:
        reduced = [sum(r * v for r, v in zip(row, vec)) for vec in nullspace]
        offset = sum(r * v for r, v in zip(row, x0))
        ge = []
        for val in reduced:
            ge.extend((val, -val))
        ge.extend((Fraction(-1), Fraction(1)))
        ge_rows.append(ge)
        ge_rhs.append(-offset)
    objective = [Fraction(0)] * (2 * dim) + [Fraction(1), Fraction(-1)]
    result = linprog_max(objective, ge_rows, ge_rhs)
    if result.status != "optimal":
        raise InternalConsistencyError(
            f"slack program must be bounded and feasible, got {result.status}"
        )
    if result.objective <= 0:
        return None
    y = [result.solution[2 * i] - result.solution[2 * i + 1] for i in range(dim)]
    dvals = [
        x0[p] + sum(vec[p] * yi for vec, yi in zip(nullspace, y))
        for p in range(nvars)
    ]
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), p in pidx.items():
        rows[i][j] = rows[j][i] = dvals[p]
    witness = DistanceMatrix(n, tuple(tuple(row) for row in rows))
    validate_metric(witness)
    if degenerate_hypergraph(witness).edges != h.edges:
        raise InternalConsistencyError(
            "slack witness does not reproduce the requested degeneracy pattern"
        )
    return witness


def _edge_order(h: UniformHypergraph) -> list[tuple[int, ...]]:
    """Edges by descending interaction with other edges, then colex rank.

    Two edges interact when they share a pair of vertices: that is exactly
    when the propagation rule can chain their middles, so high-interaction
    edges first makes pruning bite early.
    """
    edges = h.edge_list()
    pair_count: dict[tuple[int, int], int] = {}
    for e in edges:
        for p in combinations(e, 2):
            pair_count[p] = pair_count.get(p, 0) + 1
    impact = {
        e: sum(pair_count[p] - 1 for p in combinations(e, 2)) for e in edges
    }
    return sorted(edges, key=lambda e: (-impact[e], rank(e, h.n)))


def is_metric_hypergraph(
    h: UniformHypergraph, ceiling: int = DEFAULT_CEILING
) -> RealizabilityVerdict:
    """Decide whether some metric has exactly h as its degenerate triangles.

    Depth-first search over middle assignments with propagation after every
    choice; a surviving total assignment is decided by the exact slack LP.
    `explored` counts the middle choices tried.
    """
    if h.r != 3:
        raise ValueError("realizability is defined for 3-uniform hypergraphs")
    if h.n > ceiling:
        raise CeilingExceeded(h.n, ceiling)
    order = _edge_order(h)
    explored = 0

    def next_unassigned(a):
        for edge in order:
            base = 3 * rank(edge, a.n)
            if not any(a.state[base + pos] == TRUE for pos in range(3)):
                return edge
        return None

    def dfs(a):
        nonlocal explored
        edge = next_unassigned(a)
        if edge is None:
            try:
                return lp_max_slack(a, h)
            except InconsistentAssignment:
                return None
        base = 3 * rank(edge, a.n)
        for pos in range(3):
            if a.state[base + pos] == FALSE:
                continue
            branch = a.clone()
            explored += 1
            branch.choose(edge, edge[pos])
            if propagate(branch):
                witness = dfs(branch)
                if witness is not None:
                    return witness
        return None

    root = MiddleAssignment(h)
    witness = dfs(root) if propagate(root) else None
    status = "metric" if witness is not None else "non-metric"
    return RealizabilityVerdict(status, witness, explored)


@dataclass(frozen=True)
class AuditEntry:
    deleted_vertex: int | None
    edge_count: int
    verdict: RealizabilityVerdict


@dataclass(frozen=True)
class AuditReport:
    """Realizability of the canonical 19-edge hypergraph and its deletions."""

    root: AuditEntry
    deletions: tuple[AuditEntry, ...]

    def is_minimal_non_metric(self) -> bool:
        return self.root.verdict.status == "non-metric" and all(
            e.verdict.status == "metric" for e in self.deletions
        )


def nineteen_edge_hypergraph() -> UniformHypergraph:
    """The complete 3-uniform hypergraph on six vertices minus the colex-last
    triple: the canonical 19-edge instance."""
    full = full_edge_mask(6, 3)
    return UniformHypergraph(6, 3, full ^ (1 << (comb(6, 3) - 1)))


def minimal_nonmetric_audit(ceiling: int = DEFAULT_CEILING) -> AuditReport:
    """Confirm the 19-edge hypergraph is non-metric yet every single-vertex
    deletion of it is metric, witnessed by explicit matrices."""
    root_h = nineteen_edge_hypergraph()
    root = AuditEntry(None, root_h.edge_count, is_metric_hypergraph(root_h, ceiling))
    deletions = []
    for v in range(root_h.n):
        sub = delete_vertex(root_h, v)
        deletions.append(
            AuditEntry(v, sub.edge_count, is_metric_hypergraph(sub, ceiling))
        )
    return AuditReport(root, tuple(deletions))
