from .comparison import compare_models
from .crystal import TableauCrystal
from .models import Tableau, TableauDocument
from .tableaux import (
    enumerate_ssyt,
    highest_weight_tableau,
    jdt_promote,
    reading_word,
    tab_e,
    tab_epsilon,
    tab_f,
    tab_phi,
)

__all__ = [
    "Tableau",
    "TableauCrystal",
    "TableauDocument",
    "compare_models",
    "enumerate_ssyt",
    "highest_weight_tableau",
    "jdt_promote",
    "reading_word",
    "tab_e",
    "tab_epsilon",
    "tab_f",
    "tab_phi",
]
