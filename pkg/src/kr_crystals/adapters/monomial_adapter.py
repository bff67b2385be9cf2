from kr_crystals.crystal import abstract
from kr_crystals.monomials.crystal import MonomialCrystal
from kr_crystals.monomials.models import COffsets


class MonomialComponentFactory(abstract.CrystalComponentFactory):
    def __init__(self, config):
        super().__init__(config=config)

    def _create_crystal(self) -> MonomialCrystal:
        """Classical monomial crystal

        Raises:
            ValueError: If the configuration asks for the affine node
        """
        if self.config.affine:
            raise ValueError("The monomial model has no affine node 0")
        shape = self.config.shape
        return MonomialCrystal(shape, COffsets.from_choice(shape.n, self.config.offsets))
