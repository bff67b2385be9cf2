import enum

import pydantic as pdt
import pydantic_settings as pdts


class Model(enum.StrEnum):
    POLYTOPE = "polytope"
    TABLEAUX = "tableaux"
    MONOMIALS = "monomials"


class OffsetChoice(enum.StrEnum):
    """Canonical choices of the offsets c_{i,j} for the monomial model."""

    UPPER = "upper"
    LOWER = "lower"


class CrystalShape(pdt.BaseModel):
    """Parameters (n, m, i) of B^{m,i} for the Lie algebra of type A_n."""

    n: int = pdt.Field(description="Rank of the type A_n Cartan datum.")
    m: int = pdt.Field(description="Level, the bound on every Dyck-path sum.")
    i: int = pdt.Field(description="Classical node, the number of grid columns.")

    model_config = pdt.ConfigDict(frozen=True)

    @pdt.model_validator(mode="after")
    def validate_shape(self):
        """Validate 1 <= i <= n and m >= 0"""
        if self.n < 1:
            raise ValueError(f"n must be positive, got n={self.n}")
        if not 1 <= self.i <= self.n:
            raise ValueError(f"i must satisfy 1 <= i <= n, got i={self.i}, n={self.n}")
        if self.m < 0:
            raise ValueError(f"m must be non-negative, got m={self.m}")
        return self

    @property
    def width(self) -> int:
        return self.i

    @property
    def height(self) -> int:
        return self.n - self.i + 1

    @property
    def row_indices(self) -> range:
        """Row labels q = i..n, top to bottom."""
        return range(self.i, self.n + 1)

    def __str__(self) -> str:
        return f"B^{{{self.m},{self.i}}} of type A_{self.n}"


class KRCrystalConfiguration(pdts.BaseSettings):
    model: str | Model = pdt.Field(
        default=Model.POLYTOPE,
        description="Crystal model to use (polytope, tableaux, monomials).",
    )
    shape: CrystalShape = pdt.Field(description="Shape (n, m, i) of the crystal.")
    affine: bool = pdt.Field(
        default=False,
        description="Include the affine node 0 in the index set.",
    )
    offsets: str | OffsetChoice = pdt.Field(
        default=OffsetChoice.UPPER,
        description="Offsets c_{i,j} for the monomial model (upper, lower).",
    )
    log_level: str = pdt.Field(
        default="WARNING", description="Logging level used by the command line."
    )

    model_config = pdts.SettingsConfigDict(
        env_prefix="KR_CRYSTAL_",
        env_nested_delimiter="__",
        extra="forbid",
        use_enum_values=True,
    )
