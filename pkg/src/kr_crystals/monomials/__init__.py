from .crystal import MonomialCrystal, generate_component
from .models import COffsets, Monomial, MonomialStats
from .monomials import a_factor, m_e, m_f, monomial_stats

__all__ = [
    "COffsets",
    "Monomial",
    "MonomialCrystal",
    "MonomialStats",
    "a_factor",
    "generate_component",
    "m_e",
    "m_f",
    "monomial_stats",
]
