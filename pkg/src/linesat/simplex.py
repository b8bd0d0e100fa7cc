"""Exact linear programming over rationals.

A dense two-phase tableau simplex with Bland's rule: the pivot choice is
the lowest-index improving column and, on ratio ties, the row whose basic
variable has the lowest index, which rules out cycling.  Every entry is a
`fractions.Fraction`, so feasibility and sign decisions are exact; the
intended problems are small (tens of rows and columns).

Also provides exact Gauss-Jordan elimination for presolving equality
systems down to a particular solution plus a nullspace basis.
"""

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    objective: Fraction | None
    solution: tuple[Fraction, ...] | None


def solve_linear_system(rows, rhs):
    """Solve A x = b exactly.

    Returns (particular_solution, nullspace_basis) or None when the system
    is inconsistent.  The nullspace basis has one vector per free column.
    """
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    m = len(a)
    ncols = len(rows[0]) if m else 0
    pivot_of_col: dict[int, int] = {}
    prow = 0
    for col in range(ncols):
        pr = next((i for i in range(prow, m) if a[i][col] != 0), None)
        if pr is None:
            continue
        a[prow], a[pr] = a[pr], a[prow]
        inv = ONE / a[prow][col]
        a[prow] = [x * inv for x in a[prow]]
        for i in range(m):
            if i != prow and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[prow])]
        pivot_of_col[col] = prow
        prow += 1
        if prow == m:
            break
    for i in range(prow, m):
        if a[i][ncols] != 0:
            return None
    particular = [ZERO] * ncols
    for col, row in pivot_of_col.items():
        particular[col] = a[row][ncols]
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    basis = []
    for fc in free_cols:
        v = [ZERO] * ncols
        v[fc] = ONE
        for col, row in pivot_of_col.items():
            v[col] = -a[row][fc]
        basis.append(v)
    return particular, basis


def _pivot(rows, rhs, zrow, basis, r, c):
    inv = ONE / rows[r][c]
    rows[r] = [x * inv for x in rows[r]]
    rhs[r] *= inv
    for i in range(len(rows)):
        if i != r and rows[i][c] != 0:
            f = rows[i][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            rhs[i] -= f * rhs[r]
    f = zrow[c]
    if f != 0:
        for j in range(len(zrow)):
            zrow[j] -= f * rows[r][j]
    basis[r] = c


def _bland(rows, rhs, basis, cost):
    """Minimize cost.x over the current basic feasible tableau in place."""
    ncols = len(cost)
    zrow = list(cost)
    for i, b in enumerate(basis):
        if zrow[b] != 0:
            f = zrow[b]
            for j in range(ncols):
                zrow[j] -= f * rows[i][j]
    while True:
        enter = next((j for j in range(ncols) if zrow[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i in range(len(rows)):
            coeff = rows[i][enter]
            if coeff > 0:
                ratio = rhs[i] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(rows, rhs, zrow, basis, leave, enter)


def linprog_max(c, ge_rows=(), ge_rhs=(), eq_rows=(), eq_rhs=()) -> LPResult:
    """Maximize c.x subject to ge_rows.x >= ge_rhs, eq_rows.x == eq_rhs, x >= 0."""
    c = [Fraction(v) for v in c]
    ge_rows, ge_rhs = list(ge_rows), list(ge_rhs)
    eq_rows, eq_rhs = list(eq_rows), list(eq_rhs)
    nvars = len(c)
    rows = []
    rhs = []
    for row, b in zip(ge_rows, ge_rhs):
        rows.append([-Fraction(v) for v in row])
        rhs.append(-Fraction(b))
    for row, b in zip(eq_rows, eq_rhs):
        rows.append([Fraction(v) for v in row])
        rhs.append(Fraction(b))
    n_ge = len(ge_rows)
    m = len(rows)
    # Slack column for each >= constraint (written as <=), then one
    # artificial per row; flip rows to make every right side nonnegative.
    total = nvars + n_ge + m
    tab = []
    for i, row in enumerate(rows):
        full = row + [ZERO] * (n_ge + m)
        if i < n_ge:
            full[nvars + i] = ONE
        full[nvars + n_ge + i] = ONE
        if rhs[i] < 0:
            full = [-x for x in full[: nvars + n_ge]] + full[nvars + n_ge :]
            full[nvars + n_ge + i] = ONE
            rhs[i] = -rhs[i]
        tab.append(full)
    basis = [nvars + n_ge + i for i in range(m)]
    phase1 = [ZERO] * (nvars + n_ge) + [ONE] * m
    if _bland(tab, rhs, basis, phase1) != "optimal":
        raise AssertionError("phase 1 cannot be unbounded")
    if sum(rhs[i] for i in range(m) if basis[i] >= nvars + n_ge) > 0:
        return LPResult("infeasible", None, None)
    # Drive surviving zero-level artificials out of the basis; a row with no
    # real coefficient left is redundant and can be dropped.
    drop = []
    for i in range(m):
        if basis[i] >= nvars + n_ge:
            col = next(
                (j for j in range(nvars + n_ge) if tab[i][j] != 0), None
            )
            if col is None:
                drop.append(i)
            else:
                _pivot(tab, rhs, [ZERO] * total, basis, i, col)
    for i in sorted(drop, reverse=True):
        del tab[i], rhs[i], basis[i]
    tab = [row[: nvars + n_ge] for row in tab]
    cost = [-v for v in c] + [ZERO] * n_ge
    status = _bland(tab, rhs, basis, cost)
    if status == "unbounded":
        return LPResult("unbounded", None, None)
    x = [ZERO] * nvars
    for i, b in enumerate(basis):
        if b < nvars:
            x[b] = rhs[i]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return LPResult("optimal", value, tuple(x))
