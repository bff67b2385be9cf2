import pydantic as pdt

from kr_crystals.configurations import CrystalShape
from kr_crystals.errors import ShapeError
from kr_crystals.polytope.models import Pattern


class PatternDocument(pdt.BaseModel):
    """JSON interchange form of a pattern.

    ``rows`` lists row q = i first through q = n last, each row left to right
    p = 1..i. The shape keys may be omitted when the caller supplies the shape.
    """

    n: int | None = pdt.Field(default=None, description="Rank of A_n.")
    m: int | None = pdt.Field(default=None, description="Level.")
    i: int | None = pdt.Field(default=None, description="Classical node.")
    rows: list[list[pdt.NonNegativeInt]] = pdt.Field(
        description="Entries a_{p,q}, row q = i first."
    )

    def to_pattern(self, shape: CrystalShape | None = None) -> Pattern:
        """Validate against ``shape`` (or the embedded one) and build the pattern.

        Raises:
            ShapeError: If the embedded shape disagrees with ``shape`` or neither is given
            NotAMemberError: If the grid is not a member
        """
        embedded = (self.n, self.m, self.i)
        if shape is None:
            if None in embedded:
                raise ShapeError("Pattern document does not carry n, m and i")
            shape = CrystalShape(n=self.n, m=self.m, i=self.i)
        elif any(
            given is not None and given != expected
            for given, expected in zip(embedded, (shape.n, shape.m, shape.i))
        ):
            raise ShapeError(f"Pattern document shape {embedded} does not match {shape}")
        return Pattern(shape, tuple(tuple(row) for row in self.rows))
