from kr_crystals.crystal import abstract
from kr_crystals.tableaux.crystal import TableauCrystal


class TableauComponentFactory(abstract.CrystalComponentFactory):
    def __init__(self, config):
        super().__init__(config=config)

    def _create_crystal(self) -> TableauCrystal:
        return TableauCrystal(self.config.shape, affine=self.config.affine)
