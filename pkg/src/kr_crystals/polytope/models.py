import dataclasses
from typing import Self, Sequence

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import NotAMemberError, ShapeError
from kr_crystals.polytope.dyck import Grid, grid_dimensions, max_dyck_sum


@dataclasses.dataclass(frozen=True)
class Pattern:
    """Element of B^{m,i}: a grid of non-negative integers.

    ``rows[q - i][p - 1]`` is the entry a_{p,q}. Construction checks the grid
    dimensions, non-negativity and the Dyck-path bound, so every instance is a
    member of its shape.

    Raises:
        ShapeError: If the grid does not have n - i + 1 rows of length i
        NotAMemberError: If an entry is negative or a Dyck path exceeds m
    """

    shape: CrystalShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        check_dimensions(rows, self.shape)
        if any(not isinstance(a, int) or a < 0 for row in rows for a in row):
            raise NotAMemberError(f"Entries must be non-negative integers: {rows}")
        total = max_dyck_sum(rows)
        if total > self.shape.m:
            raise NotAMemberError(
                f"Dyck path sum {total} exceeds m={self.shape.m} for {rows}"
            )

    @classmethod
    def zero(cls, shape: CrystalShape) -> Self:
        return cls(shape, tuple((0,) * shape.width for _ in shape.row_indices))

    @classmethod
    def from_columns(cls, shape: CrystalShape, columns: Sequence[Sequence[int]]) -> Self:
        """Build a pattern from columns p = 1..i, each listing rows q = i..n."""
        return cls(shape, tuple(zip(*columns)))

    def entry(self, p: int, q: int) -> int:
        """Entry a_{p,q} with 1 <= p <= i and i <= q <= n."""
        return self.rows[q - self.shape.i][p - 1]

    def column(self, p: int) -> tuple[int, ...]:
        return tuple(row[p - 1] for row in self.rows)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def relevel(self, m: int) -> Self:
        """Same grid read as an element of B^{m,i} for another level m."""
        shape = CrystalShape(n=self.shape.n, m=m, i=self.shape.i)
        return type(self)(shape, self.rows)

    def label(self) -> str:
        """Rows joined by "/" with space-separated entries, e.g. "1 0/2 1/0 1"."""
        return "/".join(" ".join(str(a) for a in row) for row in self.rows)

    def to_document(self) -> dict:
        return {
            "n": self.shape.n,
            "m": self.shape.m,
            "i": self.shape.i,
            "rows": [list(row) for row in self.rows],
        }


def check_dimensions(grid: Grid, shape: CrystalShape) -> None:
    height, width = grid_dimensions(grid)
    if (height, width) != (shape.height, shape.width):
        raise ShapeError(
            f"Grid of {height}x{width} does not fit {shape}; "
            f"expected {shape.height} rows of length {shape.width}"
        )


@dataclasses.dataclass(frozen=True)
class StringData:
    """String lengths of one index together with its critical indices.

    ``p_plus``/``q_plus`` are set for l > i, ``p_minus``/``q_minus`` for l < i.
    """

    phi: int
    eps: int
    p_plus: int | None = None
    q_plus: int | None = None
    p_minus: int | None = None
    q_minus: int | None = None


@dataclasses.dataclass(frozen=True)
class TruncatedColumn:
    """Column restricted to rows start_row..n."""

    start_row: int
    values: tuple[int, ...]

    @property
    def end_row(self) -> int:
        return self.start_row + len(self.values) - 1

    def __getitem__(self, row: int) -> int:
        return self.values[row - self.start_row]

    def truncate(self, start_row: int) -> Self:
        """Drop every row above ``start_row``."""
        if not self.start_row <= start_row <= self.end_row:
            raise ShapeError(
                f"Cannot truncate rows {self.start_row}..{self.end_row} at {start_row}"
            )
        return type(self)(start_row, self.values[start_row - self.start_row :])


@dataclasses.dataclass(frozen=True)
class PromotionStep:
    """One column step of the promotion algorithm.

    ``column`` is the index p of the pr-column produced; ``auxiliary`` is the
    merged column handed to the next step and is None on the last one.
    """

    column: int
    l_sequence: tuple[int, ...]
    pr_column: tuple[int, ...]
    auxiliary: tuple[int, ...] | None


@dataclasses.dataclass(frozen=True)
class PromotionTrace:
    steps: tuple[PromotionStep, ...] = ()

    def lines(self) -> list[str]:
        out = []
        for step in self.steps:
            out.append(
                f"l^{step.column - 1}: " + "<".join(str(l) for l in step.l_sequence)
            )
            out.append(" ".join(str(a) for a in step.pr_column))
            if step.auxiliary is not None:
                out.append(" ".join(str(a) for a in step.auxiliary))
        return out
