"""Compromise (lexicographic min-max regret) selection over a payoff matrix.

Rows are actors, columns are profiles. Works on any ordered numeric type
that supports subtraction (``Money``, ``Fraction``, ``int``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, TypeVar, Union

T = TypeVar("T")
Matrix = Sequence[Sequence[T]]

TIED = "tied-through-all-levels"


def _rows(gamma: Any) -> tuple[tuple, ...]:
    rows = tuple(tuple(r) for r in getattr(gamma, "values", gamma))
    if not rows or not rows[0]:
        raise ValueError("matrix needs at least one row and one column")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def perfect_vector(gamma: Matrix) -> tuple:
    """Best payoff each actor gets in any profile."""
    return tuple(max(row) for row in _rows(gamma))


def residual_matrix(gamma: Matrix, best: Sequence) -> tuple[tuple, ...]:
    rows = _rows(gamma)
    if len(best) != len(rows):
        raise ValueError("perfect vector length does not match row count")
    return tuple(tuple(b - a for a in row) for b, row in zip(best, rows))


def sort_columns(beta: Matrix) -> tuple[tuple, ...]:
    rows = _rows(beta)
    cols = [sorted(col) for col in zip(*rows)]
    return tuple(tuple(col[r] for col in cols) for r in range(len(rows)))


@dataclass(frozen=True)
class CompromiseResult:
    residuals: tuple[tuple, ...]
    sorted_residuals: tuple[tuple, ...]
    minimax: Any
    # 0 = decided on the largest-residual row, 1 = on the next row up, ...
    decision_level: Union[int, str]
    selected: tuple[int, ...]
    perfect_vector: tuple | None = None
    selected_payoffs: tuple | None = None

    @property
    def choice(self) -> int:
        return self.selected[0]

    @property
    def tied(self) -> bool:
        return self.decision_level == TIED


def compromise_select(beta: Matrix) -> CompromiseResult:
    """Minimize the largest residual; break ties on the next-largest, and so on.

    If columns remain tied after the smallest-residual row, all of them are
    reported and ``choice`` is the first in column order.
    """
    rows = _rows(beta)
    zero = rows[0][0] - rows[0][0]
    if any(x < zero for row in rows for x in row):
        raise ValueError("residuals must be nonnegative")
    ordered = sort_columns(rows)
    n_rows = len(ordered)
    survivors = list(range(len(rows[0])))
    minimax = min(ordered[-1])
    level: Union[int, str] = TIED
    for depth in range(n_rows):
        row = ordered[n_rows - 1 - depth]
        low = min(row[q] for q in survivors)
        survivors = [q for q in survivors if row[q] == low]
        if len(survivors) == 1:
            level = depth
            break
    return CompromiseResult(
        residuals=rows,
        sorted_residuals=ordered,
        minimax=minimax,
        decision_level=level,
        selected=tuple(survivors),
    )


def solve_compromise(gamma: Matrix) -> CompromiseResult:
    rows = _rows(gamma)
    best = perfect_vector(rows)
    result = compromise_select(residual_matrix(rows, best))
    payoffs = tuple(row[result.choice] for row in rows)
    return CompromiseResult(
        residuals=result.residuals,
        sorted_residuals=result.sorted_residuals,
        minimax=result.minimax,
        decision_level=result.decision_level,
        selected=result.selected,
        perfect_vector=best,
        selected_payoffs=payoffs,
    )
