from .configurations import CrystalShape, KRCrystalConfiguration, Model, OffsetChoice
from .errors import InvariantError, NotAMemberError, ShapeError
from .kr_crystal import KRCrystal

__all__ = [
    "CrystalShape",
    "InvariantError",
    "KRCrystal",
    "KRCrystalConfiguration",
    "Model",
    "NotAMemberError",
    "OffsetChoice",
    "ShapeError",
]
