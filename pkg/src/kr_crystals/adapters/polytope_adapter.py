from kr_crystals.crystal import abstract
from kr_crystals.polytope.crystal import PolytopeCrystal


class PolytopeComponentFactory(abstract.CrystalComponentFactory):
    def __init__(self, config):
        super().__init__(config=config)

    def _create_crystal(self) -> PolytopeCrystal:
        return PolytopeCrystal(self.config.shape, affine=self.config.affine)
