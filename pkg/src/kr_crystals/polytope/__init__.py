from .crystal import PolytopeCrystal, build_affine_graph, classical_graph
from .documents import PatternDocument
from .dyck import DyckPath, dyck_paths, max_dyck_sum
from .models import Pattern, PromotionStep, PromotionTrace, StringData, TruncatedColumn
from .operators import e, f, pair_stats, string_data, weight
from .patterns import content, enumerate_patterns, is_member, weyl_dimension
from .promotion import (
    e0,
    eps0,
    f0,
    phi0,
    promote,
    promote_inverse,
    verify_weak_promotion,
)

__all__ = [
    "DyckPath",
    "Pattern",
    "PatternDocument",
    "PolytopeCrystal",
    "PromotionStep",
    "PromotionTrace",
    "StringData",
    "TruncatedColumn",
    "build_affine_graph",
    "classical_graph",
    "content",
    "dyck_paths",
    "e",
    "e0",
    "enumerate_patterns",
    "eps0",
    "f",
    "f0",
    "is_member",
    "max_dyck_sum",
    "pair_stats",
    "phi0",
    "promote",
    "promote_inverse",
    "string_data",
    "verify_weak_promotion",
    "weight",
    "weyl_dimension",
]
