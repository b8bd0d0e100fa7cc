"""r-uniform hypergraphs as bitsets over colexicographically ranked subsets.

Colex ranking is independent of the ground-set size, so adding a vertex
extends the rank space without renumbering existing edges; this keeps
closure certificates stable across vertex deletions.  Bitsets are plain
Python ints, one bit per r-subset rank.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import OutOfRange, TooFewVertices
from .metric import Graph


def rank(subset, n: int) -> int:
    """Colex rank of an r-subset of {0..n-1}."""
    s = sorted(subset)
    if len(set(s)) != len(s):
        raise OutOfRange(f"{tuple(subset)} has repeated elements")
    if s and not (0 <= s[0] and s[-1] < n):
        raise OutOfRange(f"{tuple(subset)} is not inside 0..{n - 1}")
    return sum(comb(x, i + 1) for i, x in enumerate(s))


def unrank(k: int, n: int, r: int) -> tuple[int, ...]:
    """Inverse of :func:`rank`: the k-th r-subset of {0..n-1} in colex order."""
    if not 0 <= k < comb(n, r):
        raise OutOfRange(f"rank {k} outside [0, C({n},{r}))")
    out = []
    for i in range(r, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= k:
            c += 1
        k -= comb(c, i)
        out.append(c)
    return tuple(reversed(out))


def colex_combinations(n: int, r: int):
    """Yield all r-subsets of {0..n-1} in colexicographic (rank) order."""
    if r == 0:
        yield ()
        return
    for top in range(r - 1, n):
        for rest in colex_combinations(top, r - 1):
            yield rest + (top,)


@dataclass(frozen=True)
class UniformHypergraph:
    """r-uniform hypergraph on vertices 0..n-1; edges as a bitset of ranks."""

    n: int
    r: int
    edges: int

    def __post_init__(self):
        if self.n < self.r:
            raise OutOfRange(f"n={self.n} smaller than uniformity r={self.r}")
        if not 0 <= self.edges < 1 << comb(self.n, self.r):
            raise OutOfRange("edge bitset wider than C(n, r)")

    @classmethod
    def from_edges(cls, n: int, r: int, edges) -> "UniformHypergraph":
        mask = 0
        for e in edges:
            e = tuple(sorted(e))
            if len(e) != r or len(set(e)) != r:
                raise OutOfRange(f"{e} is not an {r}-subset")
            mask |= 1 << rank(e, n)
        return cls(n, r, mask)

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def has_edge(self, subset) -> bool:
        return bool(self.edges >> rank(subset, self.n) & 1)

    def edge_list(self) -> list[tuple[int, ...]]:
        """Edges decoded in colex order."""
        out = []
        mask = self.edges
        while mask:
            low = mask & -mask
            out.append(unrank(low.bit_length() - 1, self.n, self.r))
            mask ^= low
        return out

    def is_complete(self) -> bool:
        return self.edges == full_edge_mask(self.n, self.r)


def full_edge_mask(n: int, r: int) -> int:
    return (1 << comb(n, r)) - 1


def complete_hypergraph(n: int, r: int) -> UniformHypergraph:
    return UniformHypergraph(n, r, full_edge_mask(n, r))


def complement(h: UniformHypergraph) -> UniformHypergraph:
    return UniformHypergraph(h.n, h.r, h.edges ^ full_edge_mask(h.n, h.r))


def delete_vertex(h: UniformHypergraph, v: int) -> UniformHypergraph:
    """Restrict to the edges avoiding v, relabeling vertices above v down by one."""
    if not 0 <= v < h.n:
        raise OutOfRange(f"vertex {v} outside 0..{h.n - 1}")
    kept = [
        tuple(x - 1 if x > v else x for x in e)
        for e in h.edge_list()
        if v not in e
    ]
    return UniformHypergraph.from_edges(h.n - 1, h.r, kept)


def star_construction(n: int) -> UniformHypergraph:
    """All triples meeting the fixed 3-set {0,1,2}: 3*C(n-2,2)+1 edges.

    The smallest known weakly saturated family at clique size 6, and an
    anchor for line reconstruction on n >= 5 points.
    """
    if n < 5:
        raise TooFewVertices(n, 5)
    core = {0, 1, 2}
    return UniformHypergraph.from_edges(
        n, 3, (t for t in combinations(range(n), 3) if core.intersection(t))
    )


def theta_graph(n: int) -> Graph:
    """Two degree-3 branch vertices joined by three paths, with a tail.

    Vertices 0 and 1 each join 2 and 3; vertices 3,4,...,n-1 form a path.
    Its shortest-path metric has exactly n-4 nondegenerate triangles, all of
    the form {0, 1, i} with i >= 4, which makes its degenerate-triangle set
    the standard witness that large degenerate families need not force a
    linear order.
    """
    if n < 5:
        raise TooFewVertices(n, 5)
    edges = [(0, 2), (0, 3), (1, 2), (1, 3)]
    edges.extend((i, i + 1) for i in range(3, n - 1))
    return Graph.from_edges(n, edges)
