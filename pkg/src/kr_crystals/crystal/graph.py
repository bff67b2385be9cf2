import collections
import logging
from typing import Any, Callable, Hashable, Iterable, Sequence, TypeVar

import graphviz

from kr_crystals.crystal.abstract import Crystal
from kr_crystals.crystal.models import CrystalGraph, Report, Weight

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)


def build_graph(
    crystal: Crystal[T],
    seeds: Iterable[T] | None = None,
    index_set: Sequence[int] | None = None,
) -> CrystalGraph[T]:
    """Breadth-first closure of ``seeds`` under every f_l and e_l.

    Vertices are numbered in order of first visit; each frontier is sorted by
    the model's ``sort_key`` before numbering, so the result is deterministic.

    Args:
        crystal (Crystal[T]): Model supplying the operators
        seeds (Iterable[T] | None): Start elements, the highest weight element by default
        index_set (Sequence[int] | None): Labels to follow, the crystal's index set by default

    Returns:
        CrystalGraph[T]: Closure with its f-edges, sorted

    Examples:
        >>> graph = build_graph(PolytopeCrystal(CrystalShape(n=2, m=3, i=2)))
        >>> len(graph)
        10
    """
    labels = tuple(crystal.index_set if index_set is None else index_set)
    if seeds is None:
        seeds = [crystal.highest_weight_element()]
    frontier = sorted(set(seeds), key=crystal.sort_key)
    index: dict[T, int] = {}
    order: list[T] = []
    while frontier:
        for b in frontier:
            index[b] = len(order)
            order.append(b)
        reached = set()
        for b in frontier:
            for l in labels:
                for image in (crystal.f(b, l), crystal.e(b, l)):
                    if image is not None and image not in index:
                        reached.add(image)
        frontier = sorted(reached, key=crystal.sort_key)

    edges = []
    for b in order:
        for l in labels:
            image = crystal.f(b, l)
            if image is not None:
                edges.append((index[b], l, index[image]))
    graph = CrystalGraph(tuple(order), tuple(sorted(edges)), labels)
    logger.info(f"Built crystal graph: {len(order)} vertices, {len(edges)} edges")
    return graph


def character(graph: CrystalGraph[T], crystal: Crystal[T]) -> collections.Counter[Weight]:
    """Multiset of weights of the vertices"""
    return collections.Counter(crystal.weight(b) for b in graph.vertices)


def rooted_isomorphism(
    source: CrystalGraph,
    target: CrystalGraph,
    root_source: int,
    root_target: int,
    labels: Sequence[int] | None = None,
) -> tuple[dict[int, int], Report]:
    """Grow the unique label-preserving bijection that sends one root to the other.

    Both graphs are walked simultaneously along f and e edges. A crystal
    morphism of connected crystals is determined by the image of one vertex,
    so any disagreement is reported rather than backtracked.

    Returns:
        tuple[dict[int, int], Report]: Vertex map and violations
            ("label", "injective", "total")
    """
    labels = tuple(source.index_set if labels is None else labels)
    report = Report(title="rooted isomorphism")
    mapping = {root_source: root_target}
    used = {root_target: root_source}
    queue = collections.deque([root_source])
    while queue:
        u = queue.popleft()
        w = mapping[u]
        for l in labels:
            for name, step_source, step_target in (
                ("f", source.f, target.f),
                ("e", source.e, target.e),
            ):
                x, y = step_source(u, l), step_target(w, l)
                if (x is None) != (y is None):
                    report.add("label", u, (l,), f"{name}_{l} defined on one side only")
                elif x is None:
                    continue
                elif x in mapping:
                    if mapping[x] != y:
                        report.add("label", u, (l,), f"{name}_{l} images disagree")
                elif y in used:
                    report.add("injective", x, (l,), f"target vertex {y} reached twice")
                else:
                    mapping[x] = y
                    used[y] = x
                    queue.append(x)
    if not len(mapping) == len(source) == len(target):
        report.add(
            "total",
            None,
            (),
            f"matched {len(mapping)} of {len(source)} and {len(target)} vertices",
        )
    report.checked = len(mapping)
    return mapping, report


def check_intertwining(
    source: CrystalGraph,
    target: CrystalGraph,
    mapping: dict[int, int],
    labels: Sequence[int],
) -> Report:
    """Check that a vertex map carries the ``labels`` edges of one graph onto the other"""
    report = Report(title=f"intertwining of labels {tuple(labels)}")
    matched = 0
    for u, w in mapping.items():
        for l in labels:
            for name, step_source, step_target in (
                ("f", source.f, target.f),
                ("e", source.e, target.e),
            ):
                x, y = step_source(u, l), step_target(w, l)
                expected = None if x is None else mapping.get(x)
                if expected != y:
                    report.add("intertwine", u, (l,), f"{name}_{l}: expected {expected}, got {y}")
                elif name == "f" and y is not None:
                    matched += 1
    report.checked = len(mapping)
    report.facts["matched_edges"] = matched
    return report


def graph_to_json(graph: CrystalGraph[T], dump: Callable[[T], Any]) -> dict:
    return {
        "vertices": [dump(b) for b in graph.vertices],
        "edges": [list(edge) for edge in graph.edges],
    }


def graph_to_dot(
    graph: CrystalGraph[T],
    label: Callable[[T], str],
    name: str = "crystal",
) -> str:
    """DOT source with one node per vertex; 0-labelled edges are dashed"""
    dot = graphviz.Digraph(name=name)
    for v, b in enumerate(graph.vertices):
        dot.node(str(v), label=label(b))
    for source, l, target in graph.edges:
        attributes = {"label": str(l)}
        if l == 0:
            attributes["style"] = "dashed"
        dot.edge(str(source), str(target), **attributes)
    return dot.source
