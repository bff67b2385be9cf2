"""Dyck paths through the pattern grid and the maximal path sum.

Grids are stored row-major with 0-based indices: ``grid[q - i][p - 1]`` holds
the entry a_{p,q} for columns p = 1..i and rows q = i..n.
"""

import dataclasses
import itertools
from typing import Sequence

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import ShapeError

Grid = Sequence[Sequence[int]]


def grid_dimensions(grid: Grid) -> tuple[int, int]:
    """Return (height, width) of a rectangular grid.

    Raises:
        ShapeError: If the grid is empty or ragged
    """
    if not grid or not grid[0]:
        raise ShapeError("Grid must have at least one row and one column")
    width = len(grid[0])
    if any(len(row) != width for row in grid):
        raise ShapeError("Grid rows must all have the same length")
    return len(grid), width


@dataclasses.dataclass(frozen=True)
class DyckPath:
    """Monotone staircase from a_{1,i} to a_{i,n} in 1-based indices (p, q)."""

    steps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (p, q), (next_p, next_q) in itertools.pairwise(self.steps):
            if (next_p - p, next_q - q) not in ((1, 0), (0, 1)):
                raise ValueError(f"Non-monotone step {(p, q)} -> {(next_p, next_q)}")

    def total(self, grid: Grid, shape: CrystalShape) -> int:
        return sum(grid[q - shape.i][p - 1] for p, q in self.steps)


def dyck_paths(shape: CrystalShape) -> list[DyckPath]:
    """All binomial(n-1, i-1) Dyck paths of the shape.

    Paths are listed in the order of the positions of their column steps,
    so the path running along the top row first comes first.
    """
    length = shape.n - 1
    paths = []
    for right_moves in itertools.combinations(range(length), shape.i - 1):
        p, q = 1, shape.i
        steps = [(p, q)]
        for k in range(length):
            if k in right_moves:
                p += 1
            else:
                q += 1
            steps.append((p, q))
        paths.append(DyckPath(tuple(steps)))
    return paths


def max_dyck_sum(grid: Grid) -> int:
    """Maximal entry sum along a Dyck path.

    Uses M(p,q) = a_{p,q} + max(M(p-1,q), M(p,q-1)) with missing neighbours
    read as 0. The entries need not satisfy any level bound.

    Args:
        grid (Grid): Row-major grid, row q = i first

    Returns:
        int: Value of M at the bottom-right cell a_{i,n}

    Examples:
        >>> max_dyck_sum([[1, 0], [2, 1], [0, 1]])
        5
    """
    height, width = grid_dimensions(grid)
    table = [[0] * width for _ in range(height)]
    for r in range(height):
        for c in range(width):
            above = table[r - 1][c] if r else 0
            left = table[r][c - 1] if c else 0
            table[r][c] = grid[r][c] + max(above, left)
    return table[-1][-1]
