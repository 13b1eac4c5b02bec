"""Exact rational linear algebra and LP feasibility.

This is the engine beneath the degree solvers: nullspaces of evaluation
matrices, consistency of interpolation systems, and feasibility of
sign-representation systems.  The public API speaks ``fractions.Fraction``;
internally gmpy2.mpq is used for speed (identical exact semantics).

All variables in a :class:`LinearProgram` are free (unrestricted in sign);
strict inequalities are expected to be pre-encoded with a margin of 1 by the
caller, which is sound for sign representations because those are closed
under positive scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


def _to_mpq_rows(entries) -> list[list]:
    return [[mpq(v.numerator, v.denominator) if isinstance(v, Fraction) else mpq(v)
             for v in row] for row in entries]


def _to_fraction(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]  # row-major

    @staticmethod
    def make(entries: Sequence[Sequence]) -> "RationalMatrix":
        rows = [tuple(Fraction(v) for v in row) for row in entries]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return RationalMatrix(len(rows), ncols, tuple(rows))


Relation = str  # one of ">=", "<=", "=="


@dataclass(frozen=True)
class LinearProgram:
    """Pure feasibility system over free rational variables."""

    num_vars: int
    constraints: tuple[tuple[tuple[Fraction, ...], Relation, Fraction], ...]

    @staticmethod
    def make(num_vars: int, constraints) -> "LinearProgram":
        clean = []
        for coeffs, rel, rhs in constraints:
            coeffs = tuple(Fraction(c) for c in coeffs)
            if len(coeffs) != num_vars:
                raise ValueError(
                    f"constraint has {len(coeffs)} coefficients, expected {num_vars}"
                )
            if rel not in (">=", "<=", "=="):
                raise ValueError(f"bad relation {rel!r}")
            clean.append((coeffs, rel, Fraction(rhs)))
        return LinearProgram(num_vars, tuple(clean))


def _rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = _ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def nullspace_basis(matrix: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {v : Mv = 0}; empty iff M has full column rank.

    Basis vectors come from the free columns of the reduced echelon form, so
    they are linearly independent by construction and deterministic.
    """
    rows = _to_mpq_rows(matrix.entries)
    rows, pivots = _rref(rows)
    free = [c for c in range(matrix.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [_ZERO] * matrix.cols
        v[fc] = _ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(_to_fraction(x) for x in v))
    return basis


def solve_exact(matrix: RationalMatrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One exact solution of Mv = b, or None when inconsistent."""
    b = [Fraction(v) for v in b]
    if len(b) != matrix.rows:
        raise ValueError(f"rhs length {len(b)} != {matrix.rows} rows")
    rows = _to_mpq_rows(
        [list(row) + [rhs] for row, rhs in zip(matrix.entries, b)]
    )
    rows, pivots = _rref(rows)
    if matrix.cols in pivots:
        return None  # a pivot in the augmented column means 0 = 1
    v = [_ZERO] * matrix.cols
    for r, pc in enumerate(pivots):
        v[pc] = rows[r][matrix.cols]
    return tuple(_to_fraction(x) for x in v)


def lp_feasible(lp: LinearProgram) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Exact phase-1 simplex with Bland's anti-cycling rule.

    Free variables are split as differences of nonnegatives; every row gets a
    nonnegative right-hand side, slack/surplus columns, and an artificial
    basis where needed.  Feasible iff the artificial objective reaches 0.
    """
    n = lp.num_vars
    m = len(lp.constraints)
    if m == 0:
        return True, tuple(Fraction(0) for _ in range(n))

    # Columns: x+ (n), x- (n), then one slack per inequality, then artificials.
    n_slack = sum(1 for _, rel, _ in lp.constraints if rel != "==")
    rows: list[list] = []
    rhs: list = []
    basis: list[int] = []
    slack_at = 2 * n
    art_at = 2 * n + n_slack
    total = art_at  # artificial columns appended as needed
    art_cols: list[int] = []

    slack_idx = 0
    pending: list[tuple[list, object, str]] = []
    for coeffs, rel, b in lp.constraints:
        row = [mpq(c.numerator, c.denominator) for c in coeffs]
        row += [-v for v in row]
        b = mpq(b.numerator, b.denominator)
        if b < 0:
            row = [-v for v in row]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
        pending.append((row, b, rel))

    for row, b, rel in pending:
        full = row + [_ZERO] * n_slack
        if rel != "==":
            full[slack_at + slack_idx] = _ONE if rel == "<=" else -_ONE
            slack_basic = rel == "<=" and b >= 0
            slack_col = slack_at + slack_idx
            slack_idx += 1
        else:
            slack_basic = False
            slack_col = -1
        rows.append(full)
        rhs.append(b)
        basis.append(slack_col if slack_basic else -1)

    for i in range(m):
        if basis[i] == -1:
            art_cols.append(total)
            basis[i] = total
            total += 1
    for i in range(m):
        rows[i].extend([_ZERO] * len(art_cols))
        if basis[i] >= art_at:
            rows[i][basis[i]] = _ONE

    # Phase-1 objective: minimize the sum of artificials.  Reduced-cost row
    # starts as -(sum of artificial-basic rows).
    red = [_ZERO] * total
    z = _ZERO
    for i in range(m):
        if basis[i] >= art_at:
            for j in range(total):
                red[j] -= rows[i][j]
            z -= rhs[i]
    for j in art_cols:
        red[j] += _ONE

    while True:
        enter = next((j for j in range(total) if red[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:  # phase-1 objective is bounded below by 0
            raise RuntimeError("phase-1 simplex reported unbounded")
        piv = rows[leave][enter]
        inv = _ONE / piv
        rows[leave] = [v * inv for v in rows[leave]]
        rhs[leave] = rhs[leave] * inv
        prow = rows[leave]
        pb = rhs[leave]
        for i in range(m):
            if i == leave:
                continue
            factor = rows[i][enter]
            if factor != 0:
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
                rhs[i] = rhs[i] - factor * pb
        factor = red[enter]
        if factor != 0:
            red = [a - factor * b for a, b in zip(red, prow)]
            z = z - factor * pb
        basis[leave] = enter

    if z != 0:
        return False, None
    x = [_ZERO] * (2 * n)
    for i, col in enumerate(basis):
        if col < 2 * n:
            x[col] = rhs[i]
    witness = tuple(_to_fraction(x[j] - x[n + j]) for j in range(n))
    # Exact re-check of every constraint; a failure here would be a bug.
    for coeffs, rel, b in lp.constraints:
        lhs = sum((c * w for c, w in zip(coeffs, witness)), Fraction(0))
        ok = lhs >= b if rel == ">=" else lhs <= b if rel == "<=" else lhs == b
        if not ok:
            raise RuntimeError("simplex witness failed exact re-validation")
    return True, witness
