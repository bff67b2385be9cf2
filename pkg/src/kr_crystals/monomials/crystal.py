from typing import Any

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal import abstract, graph
from kr_crystals.crystal.models import CrystalGraph, Weight
from kr_crystals.monomials import monomials
from kr_crystals.monomials.models import COffsets, Monomial


class MonomialCrystal(abstract.Crystal[Monomial]):
    """Component of Y_i(0)^m in the monomial crystal, a classical model of B(m omega_i).

    There is no promotion on monomials, so the model is classical only.
    """

    def __init__(self, shape: CrystalShape, offsets: COffsets | None = None) -> None:
        super().__init__(rank=shape.n, affine=False)
        self.shape = shape
        self.offsets = offsets or COffsets.upper(shape.n)
        if self.offsets.rank != shape.n:
            raise ValueError(f"Offsets of rank {self.offsets.rank} do not fit {shape}")

    def _highest_weight_element(self) -> Monomial:
        return Monomial.Y(self.shape.i, 0, self.shape.m)

    def _weight(self, b: Monomial) -> Weight:
        coeffs = monomials.monomial_stats(b, 1, self.rank).weight
        return Weight.from_omega(coeffs, degree=self.shape.m * self.shape.i)

    def _f(self, b: Monomial, l: int) -> Monomial | None:
        return monomials.m_f(b, l, self.offsets)

    def _e(self, b: Monomial, l: int) -> Monomial | None:
        return monomials.m_e(b, l, self.offsets)

    def _phi(self, b: Monomial, l: int) -> int:
        return monomials.monomial_stats(b, l, self.rank).phi

    def _epsilon(self, b: Monomial, l: int) -> int:
        return monomials.monomial_stats(b, l, self.rank).eps

    def sort_key(self, b: Monomial) -> Any:
        return b.exponents

    def label(self, b: Monomial) -> str:
        return str(b)

    def dump(self, b: Monomial) -> list[list[int]]:
        return b.to_document()

    def load(self, document: Any) -> Monomial:
        return Monomial.from_document(document)


def generate_component(shape: CrystalShape, offsets: COffsets | None = None) -> CrystalGraph[Monomial]:
    """Crystal graph of the component of Y_i(0)^m

    Examples:
        >>> len(generate_component(CrystalShape(n=2, m=3, i=2)))
        10
    """
    return graph.build_graph(MonomialCrystal(shape, offsets))
