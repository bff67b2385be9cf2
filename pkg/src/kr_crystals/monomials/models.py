import collections
import dataclasses
from typing import Iterable, Self

from kr_crystals.configurations import OffsetChoice

Variable = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Monomial:
    """Laurent monomial in the variables Y_i(n), kept in canonical form.

    ``exponents`` holds ((i, n), y_i(n)) pairs sorted by (i, n); zero
    exponents are dropped on construction, so equality is exponent-wise.

    Examples:
        >>> str(Monomial.Y(2, 0) * Monomial.Y(1, 1, -1))
        'Y_1(1)^-1 Y_2(0)'
    """

    exponents: tuple[tuple[Variable, int], ...] = ()

    def __post_init__(self):
        merged: collections.Counter[Variable] = collections.Counter()
        for variable, power in self.exponents:
            merged[variable] += power
        canonical = tuple(sorted((v, y) for v, y in merged.items() if y != 0))
        object.__setattr__(self, "exponents", canonical)

    @classmethod
    def Y(cls, i: int, n: int, power: int = 1) -> Self:
        return cls((((i, n), power),))

    @classmethod
    def product(cls, factors: Iterable[Self]) -> Self:
        return cls(tuple(pair for factor in factors for pair in factor.exponents))

    def y(self, i: int, n: int) -> int:
        return dict(self.exponents).get((i, n), 0)

    def support(self, i: int) -> list[int]:
        """Positions n with y_i(n) != 0, increasing"""
        return [n for (k, n), _ in self.exponents if k == i]

    def __mul__(self, other: Self) -> Self:
        return type(self)(self.exponents + other.exponents)

    def inverse(self) -> Self:
        return self.power(-1)

    def power(self, k: int) -> Self:
        return type(self)(tuple((v, y * k) for v, y in self.exponents))

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return " ".join(
            f"Y_{i}({n})" if y == 1 else f"Y_{i}({n})^{y}" for (i, n), y in self.exponents
        )

    def to_document(self) -> list[list[int]]:
        return [[i, n, y] for (i, n), y in self.exponents]

    @classmethod
    def from_document(cls, document: Iterable[Iterable[int]]) -> Self:
        return cls(tuple(((i, n), y) for i, n, y in document))


@dataclasses.dataclass(frozen=True)
class COffsets:
    """Offsets c_{i,j} in {0, 1} for adjacent nodes i, j of A_n.

    Raises:
        ValueError: If a pair is missing, a value is not 0 or 1, or
            c_{i,j} + c_{j,i} != 1
    """

    rank: int
    values: tuple[tuple[Variable, int], ...]

    def __post_init__(self):
        values = dict(self.values)
        for i in range(1, self.rank):
            pair = (values.get((i, i + 1)), values.get((i + 1, i)))
            if None in pair:
                raise ValueError(f"Offsets for nodes {i} and {i + 1} are missing")
            if any(c not in (0, 1) for c in pair) or sum(pair) != 1:
                raise ValueError(f"Offsets {pair} for nodes {i}, {i + 1} must be 0 and 1")
        object.__setattr__(self, "values", tuple(sorted(values.items())))

    def __call__(self, i: int, j: int) -> int:
        return dict(self.values)[i, j]

    @classmethod
    def upper(cls, rank: int) -> Self:
        """c_{i,j} = 1 when i < j"""
        return cls(rank, tuple(((i, j), int(i < j)) for i, j in _adjacent_pairs(rank)))

    @classmethod
    def lower(cls, rank: int) -> Self:
        """c_{i,j} = 1 when i > j"""
        return cls(rank, tuple(((i, j), int(i > j)) for i, j in _adjacent_pairs(rank)))

    @classmethod
    def from_choice(cls, rank: int, choice: str | OffsetChoice) -> Self:
        match OffsetChoice(choice):
            case OffsetChoice.UPPER:
                return cls.upper(rank)
            case OffsetChoice.LOWER:
                return cls.lower(rank)


@dataclasses.dataclass(frozen=True)
class MonomialStats:
    """Weight (as omega coefficients), string lengths and acting positions for one index"""

    weight: tuple[int, ...]
    phi: int
    eps: int
    n_f: int
    n_e: int


def _adjacent_pairs(rank: int) -> list[Variable]:
    return [pair for i in range(1, rank) for pair in ((i, i + 1), (i + 1, i))]
