"""JSON and CSV schemas for matrices, graphs, hypergraphs, certificates,
orders, and verdicts.

Writers are deterministic (fixed key order, edges in colex order), so
identical inputs produce byte-identical files.  Parsers are strict: rational
entries must be integers or "p/q" strings, and matrices are rejected unless
they satisfy the metric axioms, except when validation is explicitly turned
off.
"""

import json
from fractions import Fraction

from .errors import FormatError
from .hypergraph import UniformHypergraph
from .lines import LinearOrder
from .metric import DistanceMatrix, Graph, validate_metric
from .realizability import AuditReport, RealizabilityVerdict
from .saturation import ClosureCertificate


def _parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise FormatError(f"boolean {value!r} is not a rational entry")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"cannot parse rational {value!r}") from exc
    raise FormatError(
        f"entry {value!r} must be an integer or a 'p/q' string (floats are rejected)"
    )


def _emit_rational(value: Fraction):
    return value.numerator if value.denominator == 1 else str(value)


def dumps_matrix(d: DistanceMatrix) -> str:
    obj = {"n": d.n, "dist": [[_emit_rational(x) for x in row] for row in d.d]}
    return json.dumps(obj, separators=(",", ":"))


def loads_matrix(text: str, validate: bool = True) -> DistanceMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"n", "dist"}:
        raise FormatError('matrix object must have exactly the keys "n" and "dist"')
    n = obj["n"]
    rows = obj["dist"]
    if not isinstance(n, int) or not isinstance(rows, list) or len(rows) != n:
        raise FormatError('"dist" must be an n-row matrix')
    if any(not isinstance(row, list) or len(row) != n for row in rows):
        raise FormatError('"dist" must be square')
    d = DistanceMatrix(
        n, tuple(tuple(_parse_rational(x) for x in row) for row in rows)
    )
    if validate:
        validate_metric(d)
    return d


def dumps_matrix_csv(d: DistanceMatrix) -> str:
    lines = [str(d.n)]
    lines.extend(",".join(str(x) for x in row) for row in d.d)
    return "\n".join(lines) + "\n"


def loads_matrix_csv(text: str, validate: bool = True) -> DistanceMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise FormatError("empty CSV matrix")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise FormatError(f"CSV header must be the point count, got {lines[0]!r}") from exc
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows after the header, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        cells = [cell.strip() for cell in line.split(",")]
        if len(cells) != n:
            raise FormatError(f"row {line!r} does not have {n} entries")
        rows.append(tuple(_parse_rational(cell) for cell in cells))
    d = DistanceMatrix(n, tuple(rows))
    if validate:
        validate_metric(d)
    return d


def dumps_graph(g: Graph) -> str:
    obj = {"n": g.n, "edges": sorted([list(e) for e in g.edges])}
    return json.dumps(obj, separators=(",", ":"))


def loads_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise FormatError('graph object must have exactly the keys "n" and "edges"')
    if not isinstance(obj["n"], int) or not isinstance(obj["edges"], list):
        raise FormatError('"n" must be an int and "edges" a list of pairs')
    pairs = []
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise FormatError(f"edge {e!r} must be a pair of vertex indices")
        pairs.append(tuple(e))
    if len(set(tuple(sorted(p)) for p in pairs)) != len(pairs):
        raise FormatError("duplicate edges")
    return Graph.from_edges(obj["n"], pairs)


def dumps_hypergraph(h: UniformHypergraph) -> str:
    obj = {"n": h.n, "r": h.r, "edges": [list(e) for e in h.edge_list()]}
    return json.dumps(obj, separators=(",", ":"))


def loads_hypergraph(text: str) -> UniformHypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"n", "r", "edges"}:
        raise FormatError('hypergraph object must have exactly the keys "n", "r", "edges"')
    n, r, edges = obj["n"], obj["r"], obj["edges"]
    if not isinstance(n, int) or not isinstance(r, int) or not isinstance(edges, list):
        raise FormatError('"n" and "r" must be ints and "edges" a list')
    seen = set()
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != r
            or not all(isinstance(x, int) for x in e)
        ):
            raise FormatError(f"edge {e!r} must be a list of {r} vertex indices")
        key = tuple(sorted(e))
        if key in seen:
            raise FormatError(f"duplicate edge {e!r}")
        seen.add(key)
    return UniformHypergraph.from_edges(n, r, (tuple(e) for e in edges))


def dumps_certificate(cert: ClosureCertificate) -> str:
    h = cert.base
    obj = {
        "n": h.n,
        "r": h.r,
        "k": cert.k,
        "base": [list(e) for e in h.edge_list()],
        "steps": [{"T": list(t), "S": list(s)} for t, s in cert.steps],
    }
    return json.dumps(obj, separators=(",", ":"))


def loads_certificate(text: str) -> ClosureCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    keys = {"n", "r", "k", "base", "steps"}
    if not isinstance(obj, dict) or set(obj) != keys:
        raise FormatError(f"certificate object must have exactly the keys {sorted(keys)}")
    if not isinstance(obj["k"], int):
        raise FormatError('"k" must be an int')
    base = loads_hypergraph(
        json.dumps({"n": obj["n"], "r": obj["r"], "edges": obj["base"]})
    )
    steps = []
    for step in obj["steps"]:
        if not isinstance(step, dict) or set(step) != {"T", "S"}:
            raise FormatError('each step must have exactly the keys "T" and "S"')
        t, s = step["T"], step["S"]
        if not all(isinstance(x, int) for x in t) or not all(
            isinstance(x, int) for x in s
        ):
            raise FormatError(f"step {step!r} must contain vertex indices")
        steps.append((tuple(t), tuple(s)))
    return ClosureCertificate(base, obj["k"], tuple(steps))


def dumps_order(o: LinearOrder) -> str:
    return json.dumps({"order": list(o.order)}, separators=(",", ":"))


def loads_order(text: str) -> LinearOrder:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"order"}:
        raise FormatError('order object must have exactly the key "order"')
    if not isinstance(obj["order"], list) or not all(
        isinstance(x, int) for x in obj["order"]
    ):
        raise FormatError('"order" must be a list of point indices')
    return LinearOrder(tuple(obj["order"]))


def dumps_verdict(v: RealizabilityVerdict) -> str:
    witness = None if v.witness is None else json.loads(dumps_matrix(v.witness))
    obj = {"status": v.status, "witness": witness, "explored": v.explored}
    return json.dumps(obj, separators=(",", ":"))


def dumps_audit(report: AuditReport) -> str:
    def entry(e):
        witness = e.verdict.witness
        return {
            "deleted_vertex": e.deleted_vertex,
            "edges": e.edge_count,
            "status": e.verdict.status,
            "explored": e.verdict.explored,
            "witness": None if witness is None else json.loads(dumps_matrix(witness)),
        }

    obj = {
        "root": entry(report.root),
        "deletions": [entry(e) for e in report.deletions],
        "minimal_non_metric": report.is_minimal_non_metric(),
    }
    return json.dumps(obj, separators=(",", ":"))
