"""Exact-rational finite metric spaces.

Distances are `fractions.Fraction` throughout and every comparison is exact.
Floating point is deliberately absent: the betweenness relation
d(r,s) + d(s,t) == d(r,t) is a knife-edge equality that rounding would
destroy.  Points are 0-based integer indices.
"""

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    AsymmetryError,
    DisconnectedGraph,
    DuplicateCoordinate,
    IndexOutOfRange,
    InternalConsistencyError,
    NonpositiveDistance,
    NonzeroDiagonal,
    TooFewPoints,
    TriangleViolation,
)


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of exact rational distances on n labeled points.

    The container itself only guarantees shape; run :func:`validate_metric`
    to enforce the metric axioms.
    """

    n: int
    d: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "DistanceMatrix":
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("distance matrix must be square and nonempty")
        return cls(n, rows)

    def dist(self, i: int, j: int) -> Fraction:
        return self.d[i][j]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges stored as (u, v) pairs with u < v."""

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        out = set()
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise IndexOutOfRange(x, n)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            out.add((min(u, v), max(u, v)))
        return cls(n, frozenset(out))

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def _check_point(i: int, n: int) -> None:
    if not isinstance(i, int) or not 0 <= i < n:
        raise IndexOutOfRange(i, n)


def validate_metric(d: DistanceMatrix) -> None:
    """Check all metric axioms, raising on the first violation found.

    Scan order is deterministic: diagonal, then symmetry, positivity and the
    triangle inequality over pairs i < j in ascending order.
    """
    n = d.n
    m = d.d
    for i in range(n):
        if m[i][i] != 0:
            raise NonzeroDiagonal(i)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise AsymmetryError(i, j)
            if m[i][j] <= 0:
                raise NonpositiveDistance(i, j)
            for k in range(n):
                if k == i or k == j:
                    continue
                if m[i][j] > m[i][k] + m[k][j]:
                    raise TriangleViolation(i, j, k)


def betweenness(d: DistanceMatrix, r: int, s: int, t: int) -> bool:
    """True iff r, s, t are pairwise distinct and d(r,s) + d(s,t) == d(r,t)."""
    for x in (r, s, t):
        _check_point(x, d.n)
    if r == s or s == t or r == t:
        return False
    m = d.d
    return m[r][s] + m[s][t] == m[r][t]


def middle_of(d: DistanceMatrix, triple) -> int | None:
    """The unique point of the triple lying metrically between the other two,
    or None if the triangle is nondegenerate.

    In a valid metric at most one of the three placements can hold; finding
    two middles means the input violates the axioms.
    """
    pts = sorted(set(triple))
    if len(pts) != 3:
        raise ValueError(f"{tuple(triple)} is not a 3-subset")
    a, b, c = pts
    for x in pts:
        _check_point(x, d.n)
    m = d.d
    mids = []
    for s, (r, t) in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        if m[r][s] + m[s][t] == m[r][t]:
            mids.append(s)
    if len(mids) > 1:
        raise InternalConsistencyError(
            f"triple {pts} has {len(mids)} middles; the metric axioms were violated"
        )
    return mids[0] if mids else None


def degenerate_hypergraph(d: DistanceMatrix):
    """The 3-uniform hypergraph of all degenerate triangles of the metric."""
    from .hypergraph import UniformHypergraph, colex_combinations

    if d.n < 3:
        raise TooFewPoints(d.n, 3)
    mask = 0
    for t_rank, triple in enumerate(colex_combinations(d.n, 3)):
        if middle_of(d, triple) is not None:
            mask |= 1 << t_rank
    return UniformHypergraph(d.n, 3, mask)


def graph_metric(g: Graph) -> DistanceMatrix:
    """Shortest-path distances of a connected graph with unit edge lengths."""
    if g.n < 1:
        raise TooFewPoints(g.n, 1)
    adj = g.adjacency()
    rows = []
    for src in range(g.n):
        dist = [-1] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if any(x < 0 for x in dist):
            raise DisconnectedGraph({v for v in range(g.n) if dist[v] >= 0})
        rows.append(tuple(Fraction(x) for x in dist))
    return DistanceMatrix(g.n, tuple(rows))


def line_metric(coords) -> DistanceMatrix:
    """The metric of points on the real line at the given rational coordinates."""
    cs = [Fraction(c) for c in coords]
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if cs[i] == cs[j]:
                raise DuplicateCoordinate(i, j)
    rows = tuple(tuple(abs(a - b) for b in cs) for a in cs)
    return DistanceMatrix(len(cs), rows)


def four_cycle_metric() -> DistanceMatrix:
    """Four points in cyclic order with unit sides and diagonals of length 2.

    Every triangle is degenerate, yet no linear order realizes the space:
    the smallest such example.
    """
    rows = [
        [0, 1, 2, 1],
        [1, 0, 1, 2],
        [2, 1, 0, 1],
        [1, 2, 1, 0],
    ]
    return DistanceMatrix.from_rows(rows)


def random_rational_metric(n: int, seed: int) -> DistanceMatrix:
    """Deterministic pseudo-random metric on n points with rational distances.

    Samples distinct rational points in a planar box and takes the L1
    distance, so the triangle inequality holds by construction; no
    rejection loop over candidate matrices is ever needed.
    """
    if n < 1:
        raise TooFewPoints(n, 1)
    rng = random.Random(seed * 1_000_003 + n)
    pts: list[tuple[Fraction, Fraction]] = []
    seen = set()
    while len(pts) < n:
        p = (
            Fraction(rng.randint(0, 8 * n), rng.randint(1, 4)),
            Fraction(rng.randint(0, 8 * n), rng.randint(1, 4)),
        )
        if p not in seen:
            seen.add(p)
            pts.append(p)
    rows = tuple(
        tuple(abs(p[0] - q[0]) + abs(p[1] - q[1]) for q in pts) for p in pts
    )
    return DistanceMatrix(n, rows)


def check_menger(d: DistanceMatrix) -> list[tuple[int, int, int, int]]:
    """All 4-tuples violating the betweenness propagation rule.

    The rule: [a b c] and [a c d] together force [a b d] and [b c d].  It
    holds in every metric space, so on validated input the returned list is
    empty; a nonempty result witnesses a broken betweenness implementation
    or an invalid matrix.
    """
    n = d.n
    m = d.d
    between = set()
    for r, s, t in combinations(range(n), 3):
        for mid, (lo, hi) in ((r, (s, t)), (s, (r, t)), (t, (r, s))):
            if m[lo][mid] + m[mid][hi] == m[lo][hi]:
                between.add((lo, mid, hi))
                between.add((hi, mid, lo))
    violations = []
    for a in range(n):
        for b in range(n):
            if b == a:
                continue
            for c in range(n):
                if c in (a, b):
                    continue
                if (a, b, c) not in between:
                    continue
                for e in range(n):
                    if e in (a, b, c):
                        continue
                    if (a, c, e) in between and not (
                        (a, b, e) in between and (b, c, e) in between
                    ):
                        violations.append((a, b, c, e))
    return violations
