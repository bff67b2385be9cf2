from typing import Any

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal import abstract
from kr_crystals.crystal.models import Weight
from kr_crystals.tableaux import tableaux
from kr_crystals.tableaux.models import Tableau, TableauDocument


class TableauCrystal(abstract.Crystal[Tableau]):
    """B^{m,i} on rectangular semistandard tableaux, node 0 through jeu de taquin promotion"""

    def __init__(self, shape: CrystalShape, affine: bool = False) -> None:
        super().__init__(rank=shape.n, affine=affine)
        self.shape = shape

    def _highest_weight_element(self) -> Tableau:
        return tableaux.highest_weight_tableau(self.shape)

    def _weight(self, b: Tableau) -> Weight:
        return Weight(b.content())

    def _f(self, b: Tableau, l: int) -> Tableau | None:
        return tableaux.tab_f(b, l)

    def _e(self, b: Tableau, l: int) -> Tableau | None:
        return tableaux.tab_e(b, l)

    def _phi(self, b: Tableau, l: int) -> int:
        return tableaux.tab_phi(b, l)

    def _epsilon(self, b: Tableau, l: int) -> int:
        return tableaux.tab_epsilon(b, l)

    def _promote(self, b: Tableau) -> Tableau:
        return tableaux.jdt_promote(b)

    def _enumerate(self) -> list[Tableau]:
        return tableaux.enumerate_ssyt(self.shape)

    def sort_key(self, b: Tableau) -> Any:
        return b.rows

    def label(self, b: Tableau) -> str:
        return b.label()

    def dump(self, b: Tableau) -> dict:
        return b.to_document()

    def load(self, document: Any) -> Tableau:
        return TableauDocument.model_validate(document).to_tableau(self.shape)
