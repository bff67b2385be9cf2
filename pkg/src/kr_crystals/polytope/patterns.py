import fractions
import itertools
import logging
import math

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import NotAMemberError
from kr_crystals.polytope.dyck import Grid, max_dyck_sum
from kr_crystals.polytope.models import Pattern, check_dimensions

logger = logging.getLogger(__name__)


def is_member(grid: Grid, shape: CrystalShape) -> bool:
    """Check whether a grid lies in B^{m,i}.

    Args:
        grid (Grid): Row-major grid, row q = i first
        shape (CrystalShape): Target shape

    Returns:
        bool: True iff every entry is >= 0 and every Dyck-path sum is <= m

    Raises:
        ShapeError: If the grid dimensions do not match the shape
        NotAMemberError: If an entry is not an integer

    Examples:
        >>> is_member([[1, 0], [2, 1], [0, 1]], CrystalShape(n=4, m=5, i=2))
        True
    """
    check_dimensions(grid, shape)
    if any(not isinstance(a, int) for row in grid for a in row):
        raise NotAMemberError(f"Entries must be integers: {grid}")
    if any(a < 0 for row in grid for a in row):
        return False
    return max_dyck_sum(grid) <= shape.m


def enumerate_patterns(shape: CrystalShape) -> list[Pattern]:
    """All members of B^{m,i} in lexicographic row-major order.

    Cells are filled row by row; the value of a cell ranges up to m minus the
    best path sum already reaching it, so every branch ends in a member.
    """
    height, width = shape.height, shape.width
    cells = [(r, c) for r in range(height) for c in range(width)]
    grid = [[0] * width for _ in range(height)]
    table = [[0] * width for _ in range(height)]
    found: list[Pattern] = []

    def fill(k: int) -> None:
        if k == len(cells):
            found.append(Pattern(shape, tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        reach = max(table[r - 1][c] if r else 0, table[r][c - 1] if c else 0)
        for value in range(shape.m - reach + 1):
            grid[r][c] = value
            table[r][c] = reach + value
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    logger.debug(f"Enumerated {len(found)} patterns of {shape}")
    return found


def weyl_dimension(shape: CrystalShape) -> int:
    """Dimension of the sl_{n+1} module of highest weight m * omega_i.

    Examples:
        >>> weyl_dimension(CrystalShape(n=3, m=1, i=2))
        6
    """
    highest = [shape.m] * shape.i + [0] * (shape.n + 1 - shape.i)
    dimension = math.prod(
        fractions.Fraction(highest[a] - highest[b] + b - a, b - a)
        for a, b in itertools.combinations(range(shape.n + 1), 2)
    )
    if dimension.denominator != 1:
        raise ArithmeticError(f"Non-integral Weyl dimension {dimension} for {shape}")
    return int(dimension)


def content(pattern: Pattern) -> tuple[int, ...]:
    """Weight of a pattern in epsilon coordinates (r_1, ..., r_{n+1}).

    Starts from m * omega_i and subtracts alpha_{p,q} = eps_p - eps_{q+1} once
    per unit of a_{p,q}.
    """
    shape = pattern.shape
    counts = [shape.m] * shape.i + [0] * (shape.n + 1 - shape.i)
    for q, row in zip(shape.row_indices, pattern.rows):
        for p, a in enumerate(row, start=1):
            counts[p - 1] -= a
            counts[q] += a
    return tuple(counts)
