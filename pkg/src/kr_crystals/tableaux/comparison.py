import logging

from kr_crystals.configurations import CrystalShape
from kr_crystals.crystal.graph import build_graph, character, check_intertwining, rooted_isomorphism
from kr_crystals.crystal.models import Report
from kr_crystals.polytope.crystal import PolytopeCrystal
from kr_crystals.polytope.models import Pattern
from kr_crystals.tableaux.crystal import TableauCrystal
from kr_crystals.tableaux.models import Tableau

logger = logging.getLogger(__name__)


def compare_models(shape: CrystalShape) -> Report:
    """Certify that the polytope and tableau models of B^{m,i} are the same affine crystal.

    The classical isomorphism is grown from the all-zero pattern to the
    tableau whose row r is filled with r, then every 0-arrow of the polytope
    graph is checked against the tableau graph under that map.

    Args:
        shape (CrystalShape): The KR crystal to compare

    Returns:
        Report: Clauses "character", "label", "injective", "total" and
            "intertwine"; facts ``vertices``, ``matched_zero_edges`` and
            ``certified`` (1 when no violation was found)
    """
    polytope = PolytopeCrystal(shape, affine=True)
    tableaux = TableauCrystal(shape, affine=True)
    polytope_graph = build_graph(polytope)
    tableau_graph = build_graph(tableaux)

    report = Report(title=f"polytope vs tableaux on {shape}")
    if character(polytope_graph, polytope) != character(tableau_graph, tableaux):
        report.add("character", None, (), "weight multisets differ")

    classical = tuple(range(1, shape.n + 1))
    mapping, classical_report = rooted_isomorphism(
        polytope_graph,
        tableau_graph,
        polytope_graph.index[Pattern.zero(shape)],
        tableau_graph.index[Tableau.highest_weight(shape)],
        labels=classical,
    )
    report.extend(classical_report)

    matched = 0
    if classical_report.ok:
        zero_report = check_intertwining(polytope_graph, tableau_graph, mapping, labels=(0,))
        report.extend(zero_report)
        matched = zero_report.facts["matched_edges"]

    report.checked = len(mapping)
    report.facts["vertices"] = len(polytope_graph)
    report.facts["matched_zero_edges"] = matched
    report.facts["certified"] = int(report.ok)
    logger.info(f"Model comparison on {shape}: {'certified' if report.ok else 'failed'}")
    return report
