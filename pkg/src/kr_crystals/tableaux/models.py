import dataclasses
import itertools
from typing import Self

import pydantic as pdt

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import NotAMemberError, ShapeError


@dataclasses.dataclass(frozen=True)
class Tableau:
    """Semistandard tableau of rectangular shape i x m over 1..n+1.

    Rows weakly increase left to right, columns strictly increase top to
    bottom. Construction checks all of this against ``shape``.

    Raises:
        ShapeError: If the rows do not form an i x m rectangle
        NotAMemberError: If an entry is out of range or semistandardness fails
    """

    shape: CrystalShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = self.shape
        if len(rows) != shape.i or any(len(row) != shape.m for row in rows):
            raise ShapeError(f"Tableau {rows} is not a {shape.i}x{shape.m} rectangle")
        if any(not 1 <= a <= shape.n + 1 for row in rows for a in row):
            raise NotAMemberError(f"Entries of {rows} must lie in 1..{shape.n + 1}")
        if any(a > b for row in rows for a, b in itertools.pairwise(row)):
            raise NotAMemberError(f"Rows of {rows} are not weakly increasing")
        if any(a >= b for upper, lower in itertools.pairwise(rows) for a, b in zip(upper, lower)):
            raise NotAMemberError(f"Columns of {rows} are not strictly increasing")

    @classmethod
    def highest_weight(cls, shape: CrystalShape) -> Self:
        """Row r filled with the letter r"""
        return cls(shape, tuple((r,) * shape.m for r in range(1, shape.i + 1)))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    def content(self) -> tuple[int, ...]:
        counts = [0] * (self.shape.n + 1)
        for row in self.rows:
            for a in row:
                counts[a - 1] += 1
        return tuple(counts)

    def label(self) -> str:
        return "/".join(" ".join(str(a) for a in row) for row in self.rows)

    def text(self) -> str:
        """Rows aligned one per line"""
        width = len(str(self.shape.n + 1))
        return "\n".join(" ".join(str(a).rjust(width) for a in row) for row in self.rows)

    def to_document(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}


class TableauDocument(pdt.BaseModel):
    """JSON form ``{"rows": [[1, 1, 2], [2, 3, 3]]}``"""

    rows: list[list[pdt.PositiveInt]] = pdt.Field(description="Rows, top to bottom.")

    def to_tableau(self, shape: CrystalShape) -> Tableau:
        return Tableau(shape, tuple(tuple(row) for row in self.rows))
