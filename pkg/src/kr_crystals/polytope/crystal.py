from typing import Any

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal import abstract, graph
from kr_crystals.crystal.models import CrystalGraph, Weight
from kr_crystals.polytope import operators, patterns, promotion
from kr_crystals.polytope.documents import PatternDocument
from kr_crystals.polytope.models import Pattern


class PolytopeCrystal(abstract.Crystal[Pattern]):
    """B^{m,i} realized on lattice points of the Dyck-path polytope"""

    def __init__(self, shape: CrystalShape, affine: bool = False) -> None:
        super().__init__(rank=shape.n, affine=affine)
        self.shape = shape

    def _highest_weight_element(self) -> Pattern:
        return Pattern.zero(self.shape)

    def _weight(self, b: Pattern) -> Weight:
        return operators.weight(b)

    def _f(self, b: Pattern, l: int) -> Pattern | None:
        return operators.f(b, l)

    def _e(self, b: Pattern, l: int) -> Pattern | None:
        return operators.e(b, l)

    def _phi(self, b: Pattern, l: int) -> int:
        return operators.string_data(b, l).phi

    def _epsilon(self, b: Pattern, l: int) -> int:
        return operators.string_data(b, l).eps

    def _promote(self, b: Pattern) -> Pattern:
        return promotion.promote(b)[0]

    def _enumerate(self) -> list[Pattern]:
        return patterns.enumerate_patterns(self.shape)

    def sort_key(self, b: Pattern) -> Any:
        return b.rows

    def label(self, b: Pattern) -> str:
        return b.label()

    def dump(self, b: Pattern) -> dict:
        return b.to_document()

    def load(self, document: Any) -> Pattern:
        return PatternDocument.model_validate(document).to_pattern(self.shape)


def classical_graph(shape: CrystalShape) -> CrystalGraph[Pattern]:
    """Crystal graph of B^{m,i} over {1..n} seeded at the all-zero pattern"""
    return graph.build_graph(PolytopeCrystal(shape))


def build_affine_graph(shape: CrystalShape) -> CrystalGraph[Pattern]:
    """Crystal graph of B^{m,i} over {0..n}, node 0 from f_0 = pr^{-1} f_1 pr"""
    return graph.build_graph(PolytopeCrystal(shape, affine=True))
