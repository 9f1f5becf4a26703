"""Exact two-phase simplex over the rationals.

Solves  max c.x  subject to  A x = b, x >= 0  with every entry a
Fraction, so optima and certificates come out exact.  Pivoting uses
Bland's smallest-index rule, which cannot cycle; an iteration cap guards
against implementation bugs rather than degeneracy.  Phase 1 introduces
one artificial variable per row and drives their sum to zero; redundant
rows surface as artificial variables stuck in the basis at value zero and
are pivoted out or dropped, after which the artificial columns are
discarded entirely.

Instances here are tiny (a few thousand columns, two or three rows), so a
dense tableau is the simplest correct representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ITERATION_CAP = 100_000

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class SimplexResult:
    status: str
    value: Fraction | None
    solution: tuple[Fraction, ...]


class SimplexIterationError(RuntimeError):
    """The pivot cap was hit; with Bland's rule this indicates a bug."""


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [entry / piv for entry in tableau[row]]
    pivot_row = tableau[row]
    for r, line in enumerate(tableau):
        if r != row and line[col]:
            factor = line[col]
            tableau[r] = [entry - factor * pe for entry, pe in zip(line, pivot_row)]
    basis[row] = col


def _run_phase(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: list[Fraction],
) -> str:
    """Maximise the reduced-cost row by Bland pivoting; mutates in place.

    cost has one entry per column plus the objective cell at the end.
    Entering column: smallest index with positive reduced cost.  Leaving
    row: minimum ratio, ties broken by smallest basic variable index.
    """
    n_cols = len(cost) - 1
    for _ in range(ITERATION_CAP):
        col = next((j for j in range(n_cols) if cost[j] > 0), None)
        if col is None:
            return OPTIMAL
        best_ratio = None
        best_row = None
        for r, line in enumerate(tableau):
            if line[col] > 0:
                ratio = line[-1] / line[col]
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])
                ):
                    best_ratio = ratio
                    best_row = r
        if best_row is None:
            return UNBOUNDED
        _pivot(tableau, basis, best_row, col)
        factor = cost[col]
        pivot_row = tableau[best_row]
        for j in range(n_cols + 1):
            if pivot_row[j]:
                cost[j] -= factor * pivot_row[j]
    raise SimplexIterationError(f"exceeded {ITERATION_CAP} pivots")


def solve(
    objective: Sequence[Fraction],
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
) -> SimplexResult:
    """Maximise objective.x subject to rows.x = rhs and x >= 0."""
    n = len(objective)
    m = len(rows)
    objective = [Fraction(v) for v in objective]

    # build [A | I | b] with nonnegative right-hand sides
    tableau: list[list[Fraction]] = []
    for r, (row, b) in enumerate(zip(rows, rhs)):
        line = [Fraction(v) for v in row]
        b = Fraction(b)
        if b < 0:
            line = [-v for v in line]
            b = -b
        art = [Fraction(0)] * m
        art[r] = Fraction(1)
        tableau.append(line + art + [b])
    basis = [n + r for r in range(m)]

    # phase 1: maximise -(sum of artificials); its reduced-cost row over the
    # artificial basis is the column sum of the structural part
    cost = [Fraction(0)] * (n + m + 1)
    for line in tableau:
        for j in range(n):
            cost[j] += line[j]
        cost[-1] += line[-1]
    status = _run_phase(tableau, basis, cost)
    if status != OPTIMAL:  # phase-1 objective is bounded by construction
        raise SimplexIterationError("phase 1 reported unbounded")
    if cost[-1] != 0:
        return SimplexResult(INFEASIBLE, None, ())

    # drive leftover artificials out of the basis, dropping redundant rows
    for r in range(len(basis) - 1, -1, -1):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is None:
                del tableau[r]
                del basis[r]
            else:
                _pivot(tableau, basis, r, col)
    tableau = [line[:n] + [line[-1]] for line in tableau]

    # phase 2: the real objective expressed over the current basis
    cost = objective + [Fraction(0)]
    for r, bv in enumerate(basis):
        factor = cost[bv]
        if factor:
            for j in range(n + 1):
                if tableau[r][j]:
                    cost[j] -= factor * tableau[r][j]
    status = _run_phase(tableau, basis, cost)
    if status == UNBOUNDED:
        return SimplexResult(UNBOUNDED, None, ())

    solution = [Fraction(0)] * n
    for r, bv in enumerate(basis):
        solution[bv] = tableau[r][-1]
    value = sum(c * x for c, x in zip(objective, solution))
    return SimplexResult(OPTIMAL, value, tuple(solution))
