"""Checkers for the crystal axioms and for the Stembridge local conditions.

Both return a :class:`Report`; an empty report means the graph passed.
"""

import functools
import itertools
import logging
from typing import Hashable, TypeVar

from kr_crystals.crystal.abstract import Crystal
from kr_crystals.crystal.models import CrystalGraph, Report, Weight

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)


def verify_axioms(graph: CrystalGraph[T], crystal: Crystal[T]) -> Report:
    """Check the abstract crystal axioms on every vertex and label.

    Clauses reported:

    * "1": phi_l - epsilon_l = <alpha_l^vee, wt>
    * "2" / "3": wt moves by +alpha_l along e_l and by -alpha_l along f_l
    * "4" / "5": epsilon_l and phi_l move by one along e_l and f_l
    * "6": an f_l-edge u -> v exists iff e_l v = u, and matches the model's f_l
    * "7": phi_l and epsilon_l are non-negative integers
    * "determinism", "semiregular", "closure", "connectivity"

    Args:
        graph (CrystalGraph[T]): Graph whose edges are read as f_l
        crystal (Crystal[T]): Model supplying wt, phi, epsilon, e and f

    Returns:
        Report: One violation per failed check, with the offending vertex
    """
    report = Report(title="crystal axioms")
    rank = crystal.rank
    weights = [crystal.weight(b) for b in graph.vertices]

    for v, b in enumerate(graph.vertices):
        wt = weights[v]
        for l in graph.index_set:
            phi, eps = crystal.phi(b, l), crystal.epsilon(b, l)
            root = Weight.simple_root(rank, l)
            if phi < 0 or eps < 0:
                report.add("7", v, (l,), f"phi={phi}, epsilon={eps}")
            if phi - eps != wt.pairing(l):
                report.add("1", v, (l,), f"phi - epsilon = {phi - eps} != {wt.pairing(l)}")

            successors = graph.successors.get((v, l), [])
            predecessors = graph.predecessors.get((v, l), [])
            if len(successors) > 1 or len(predecessors) > 1:
                report.add("determinism", v, (l,), "more than one edge with this label")

            down, up = graph.f(v, l), graph.e(v, l)
            if up is not None:
                if weights[up] != wt + root:
                    report.add("2", v, (l,), "wt(e b) != wt(b) + alpha")
                if crystal.epsilon(graph.vertices[up], l) != eps - 1 or (
                    crystal.phi(graph.vertices[up], l) != phi + 1
                ):
                    report.add("4", v, (l,), "string lengths do not move by one under e")
            if down is not None:
                if weights[down] != wt - root:
                    report.add("3", v, (l,), "wt(f b) != wt(b) - alpha")
                if crystal.phi(graph.vertices[down], l) != phi - 1 or (
                    crystal.epsilon(graph.vertices[down], l) != eps + 1
                ):
                    report.add("5", v, (l,), "string lengths do not move by one under f")
                if crystal.e(graph.vertices[down], l) != b:
                    report.add("6", v, (l,), f"edge to {down} is not inverted by e")

            image = crystal.f(b, l)
            expected = None if down is None else graph.vertices[down]
            if image is not None and image not in graph.index:
                report.add("closure", v, (l,), "f image lies outside the graph")
            elif image != expected:
                report.add("6", v, (l,), "graph edge disagrees with the model's f")
            raised = crystal.e(b, l)
            if raised is not None and raised not in graph.index:
                report.add("closure", v, (l,), "e image lies outside the graph")
            elif raised is not None and graph.f(graph.index[raised], l) != v:
                report.add("6", v, (l,), "e image has no f edge back")

            if graph.string_length(v, l) != phi or (
                graph.string_length(v, l, lowering=False) != eps
            ):
                report.add("semiregular", v, (l,), "string lengths differ from phi/epsilon")

    if not graph.is_connected():
        report.add("connectivity", None, (), "graph is not connected")
    report.checked = len(graph)
    logger.info(f"Axiom check on {len(graph)} vertices: {len(report.violations)} violation(s)")
    return report


def verify_stembridge(graph: CrystalGraph) -> Report:
    """Check the Stembridge local conditions on a simply-laced crystal graph.

    String lengths are read off the graph itself. For every vertex and every
    ordered pair of distinct labels (l, j):

    * "1": e_l never decreases epsilon_j and never increases phi_j
    * "2": if e_l leaves epsilon_j unchanged, e_l and e_j commute at b and
      b' = e_l e_j b has phi_l(b') = phi_l(f_j b')
    * "3": if e_l raises epsilon_j and e_j raises epsilon_l, then
      e_l e_j^2 e_l b = e_j e_l^2 e_j b = b' with
      phi_l(b') - phi_l(f_j b') = phi_j(b') - phi_j(f_l b') = -1
    * "4", "5": the same two statements for f, phi and epsilon swapped
    * "connectivity"
    """
    report = Report(title="Stembridge conditions")

    @functools.cache
    def eps(v: int, l: int) -> int:
        return graph.string_length(v, l, lowering=False)

    @functools.cache
    def phi(v: int, l: int) -> int:
        return graph.string_length(v, l)

    def walk(v: int | None, step, labels: tuple[int, ...]) -> int | None:
        for l in reversed(labels):
            if v is None:
                return None
            v = step(v, l)
        return v

    for v in range(len(graph)):
        for l, j in itertools.permutations(graph.index_set, 2):
            for raising in (True, False):
                _check_pair(report, graph, v, l, j, raising, eps, phi, walk)

    if not graph.is_connected():
        report.add("connectivity", None, (), "graph is not connected")
    report.checked = len(graph)
    logger.info(
        f"Stembridge check on {len(graph)} vertices: {len(report.violations)} violation(s)"
    )
    return report


def _check_pair(report, graph, v, l, j, raising, eps, phi, walk) -> None:
    # the lowering case is the raising case with (e, eps) and (f, phi) swapped
    if raising:
        step, back, near, far = graph.e, graph.f, eps, phi
        commute_clause, braid_clause = "2", "3"
    else:
        step, back, near, far = graph.f, graph.e, phi, eps
        commute_clause, braid_clause = "4", "5"

    moved_l, moved_j = step(v, l), step(v, j)
    if raising and moved_l is not None:
        if eps(moved_l, j) < eps(v, j) or phi(moved_l, j) > phi(v, j):
            report.add("1", v, (l, j), "e_l moved the j-string the wrong way")
    if moved_l is None or moved_j is None:
        return

    change_j = near(moved_l, j) - near(v, j)
    change_l = near(moved_j, l) - near(v, l)
    if change_j == 0:
        first, second = walk(v, step, (l, j)), walk(v, step, (j, l))
        if first is None or first != second:
            report.add(commute_clause, v, (l, j), "operators do not commute")
        elif far(first, l) != far(back(first, j), l):
            report.add(commute_clause, v, (l, j), "string length changes across the square")
    elif change_j == 1 and change_l == 1:
        first = walk(v, step, (l, j, j, l))
        second = walk(v, step, (j, l, l, j))
        if first is None or first != second:
            report.add(braid_clause, v, (l, j), "octagon relation fails")
        elif far(first, l) - far(back(first, j), l) != -1 or (
            far(first, j) - far(back(first, l), j) != -1
        ):
            report.add(braid_clause, v, (l, j), "string lengths wrong across the octagon")
