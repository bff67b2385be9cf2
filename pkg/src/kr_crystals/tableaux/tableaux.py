"""Rectangular tableaux over 1..n+1: enumeration, bracketing and promotion.

The reading word runs through the columns left to right, each column read
bottom to top. Every letter l+1 is paired with the nearest later unpaired
letter l. f_l changes the rightmost unpaired l into l+1, e_l changes the
leftmost unpaired l+1 into l.
"""

import itertools
import logging

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import InvariantError, NotAMemberError
from kr_crystals.tableaux.models import Tableau

logger = logging.getLogger(__name__)

Position = tuple[int, int]


def enumerate_ssyt(shape: CrystalShape) -> list[Tableau]:
    """Every semistandard i x m tableau over 1..n+1, in lexicographic column order

    Examples:
        >>> len(enumerate_ssyt(CrystalShape(n=2, m=3, i=2)))
        10
    """
    candidates = list(itertools.combinations(range(1, shape.n + 2), shape.i))
    tableaux: list[Tableau] = []

    def extend(columns: list[tuple[int, ...]]) -> None:
        if len(columns) == shape.m:
            rows = tuple(zip(*columns)) if columns else ((),) * shape.i
            tableaux.append(Tableau(shape, rows))
            return
        for column in candidates:
            if columns and any(a > b for a, b in zip(columns[-1], column)):
                continue
            columns.append(column)
            extend(columns)
            columns.pop()

    extend([])
    return tableaux


def highest_weight_tableau(shape: CrystalShape) -> Tableau:
    return Tableau.highest_weight(shape)


def reading_word(tableau: Tableau) -> list[tuple[int, Position]]:
    """Letters with their (row, column) positions, columns left to right, bottom to top"""
    return [
        (tableau.rows[row][column], (row, column))
        for column in range(tableau.shape.m)
        for row in reversed(range(tableau.shape.i))
    ]


def _bracket(tableau: Tableau, l: int) -> tuple[list[Position], list[Position]]:
    """Unpaired positions of l and of l+1, each in reading order"""
    open_upper: list[Position] = []
    free_lower: list[Position] = []
    for letter, position in reading_word(tableau):
        if letter == l + 1:
            open_upper.append(position)
        elif letter == l:
            if open_upper:
                open_upper.pop()
            else:
                free_lower.append(position)
    return free_lower, open_upper


def _replace(tableau: Tableau, position: Position, letter: int) -> Tableau:
    rows = [list(row) for row in tableau.rows]
    row, column = position
    rows[row][column] = letter
    try:
        return Tableau(tableau.shape, tuple(tuple(r) for r in rows))
    except NotAMemberError as exc:
        raise InvariantError(f"Bracketing left the tableau {tableau.label()}: {exc}") from exc


def tab_phi(tableau: Tableau, l: int) -> int:
    return len(_bracket(tableau, l)[0])


def tab_epsilon(tableau: Tableau, l: int) -> int:
    return len(_bracket(tableau, l)[1])


def tab_f(tableau: Tableau, l: int) -> Tableau | None:
    free_lower, _ = _bracket(tableau, l)
    if not free_lower:
        return None
    return _replace(tableau, free_lower[-1], l + 1)


def tab_e(tableau: Tableau, l: int) -> Tableau | None:
    _, open_upper = _bracket(tableau, l)
    if not open_upper:
        return None
    return _replace(tableau, open_upper[0], l)


def jdt_promote(tableau: Tableau) -> Tableau:
    """Promotion by jeu de taquin.

    The letters n+1 are removed and every other letter is raised by one.
    The vacated cells, a tail of the last row, are slid to the top-left one
    at a time, leftmost first; at each step the hole takes the larger of its
    upper and left neighbours (the upper one on ties). The cells freed at
    the top-left are filled with 1.

    Raises:
        InvariantError: If a hole is not an outer corner when it starts to
            slide, or the result is not semistandard

    Examples:
        >>> shape = CrystalShape(n=2, m=1, i=2)
        >>> jdt_promote(Tableau(shape, ((2,), (3,)))).rows
        ((1,), (3,))
    """
    shape = tableau.shape
    top = shape.n + 1
    grid: list[list[int | None]] = [
        [None if a == top else a + 1 for a in row] for row in tableau.rows
    ]
    holes = [(r, c) for r in range(shape.i) for c in range(shape.m) if grid[r][c] is None]

    for r, c in holes:
        if any(grid[r][k] is not None for k in range(c + 1, shape.m)) or any(
            grid[k][c] is not None for k in range(r + 1, shape.i)
        ):
            raise InvariantError(f"Cell ({r}, {c}) of {tableau.label()} is not an outer corner")
        while True:
            up = grid[r - 1][c] if r > 0 else None
            left = grid[r][c - 1] if c > 0 else None
            if up is None and left is None:
                break
            if left is None or (up is not None and up >= left):
                grid[r][c], grid[r - 1][c] = up, None
                r -= 1
            else:
                grid[r][c], grid[r][c - 1] = left, None
                c -= 1

    rows = tuple(tuple(1 if a is None else a for a in row) for row in grid)
    try:
        return Tableau(shape, rows)
    except NotAMemberError as exc:
        raise InvariantError(f"Promotion of {tableau.label()} is not semistandard") from exc
