import collections
import dataclasses
import functools
from typing import Generic, Hashable, Self, Sequence, TypeVar

import networkx as nx

T = TypeVar("T", bound=Hashable)


@dataclasses.dataclass(frozen=True)
class Weight:
    """Classical weight of sl_{n+1} in epsilon coordinates (r_1, ..., r_{n+1}).

    The fundamental-weight view is derived from the content, so both views
    always agree: the coefficient of omega_l is r_l - r_{l+1}.
    """

    content: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.content) - 1

    @property
    def omega_coeffs(self) -> tuple[int, ...]:
        r = self.content
        return tuple(r[l] - r[l + 1] for l in range(self.rank))

    def pairing(self, l: int) -> int:
        """<alpha_l^vee, wt>; index 0 uses the level-zero value r_{n+1} - r_1."""
        if l == 0:
            return self.content[-1] - self.content[0]
        return self.content[l - 1] - self.content[l]

    @classmethod
    def simple_root(cls, rank: int, l: int) -> Self:
        """alpha_l = eps_l - eps_{l+1}, with alpha_0 = eps_{n+1} - eps_1."""
        content = [0] * (rank + 1)
        content[l - 1] += 1
        content[l % (rank + 1)] -= 1
        return cls(tuple(content))

    @classmethod
    def from_omega(cls, coeffs: Sequence[int], degree: int) -> Self:
        """Weight with the given omega coefficients and content summing to ``degree``.

        Raises:
            ValueError: If no integral content with that sum exists
        """
        rank = len(coeffs)
        base = [sum(coeffs[j:]) for j in range(rank)] + [0]
        shift, remainder = divmod(degree - sum(base), rank + 1)
        if remainder:
            raise ValueError(f"Weight {tuple(coeffs)} has no content of degree {degree}")
        return cls(tuple(r + shift for r in base))

    def __add__(self, other: Self) -> Self:
        return type(self)(tuple(a + b for a, b in zip(self.content, other.content)))

    def __sub__(self, other: Self) -> Self:
        return type(self)(tuple(a - b for a, b in zip(self.content, other.content)))


@dataclasses.dataclass(frozen=True)
class CrystalGraph(Generic[T]):
    """Finite crystal graph with f-edges ``(source, label, target)``.

    Vertices are numbered by position in ``vertices``.
    """

    vertices: tuple[T, ...]
    edges: tuple[tuple[int, int, int], ...]
    index_set: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @functools.cached_property
    def index(self) -> dict[T, int]:
        return {b: v for v, b in enumerate(self.vertices)}

    @functools.cached_property
    def successors(self) -> dict[tuple[int, int], list[int]]:
        out = collections.defaultdict(list)
        for source, label, target in self.edges:
            out[source, label].append(target)
        return dict(out)

    @functools.cached_property
    def predecessors(self) -> dict[tuple[int, int], list[int]]:
        out = collections.defaultdict(list)
        for source, label, target in self.edges:
            out[target, label].append(source)
        return dict(out)

    def f(self, v: int, l: int) -> int | None:
        targets = self.successors.get((v, l))
        return targets[0] if targets else None

    def e(self, v: int, l: int) -> int | None:
        sources = self.predecessors.get((v, l))
        return sources[0] if sources else None

    def string_length(self, v: int, l: int, lowering: bool = True) -> int:
        """Number of f_l (or e_l) steps from v along the edges, cycles cut at |G|."""
        step = self.f if lowering else self.e
        length, current = 0, step(v, l)
        while current is not None and length < len(self):
            length += 1
            current = step(current, l)
        return length

    def with_edges(self, edges: Sequence[tuple[int, int, int]]) -> Self:
        return type(self)(self.vertices, tuple(sorted(edges)), self.index_set)

    def restrict(self, labels: Sequence[int]) -> Self:
        """Same vertices, keeping only edges whose label is in ``labels``."""
        kept = tuple(edge for edge in self.edges if edge[1] in labels)
        return type(self)(self.vertices, kept, tuple(labels))

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(len(self)))
        for source, label, target in self.edges:
            graph.add_edge(source, target, label=label)
        return graph

    def is_connected(self) -> bool:
        return len(self) > 0 and nx.is_weakly_connected(self.to_networkx())


@dataclasses.dataclass(frozen=True)
class Violation:
    clause: str
    vertex: int | None
    labels: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        where = "" if self.vertex is None else f" at vertex {self.vertex}"
        labels = f" labels {self.labels}" if self.labels else ""
        return f"[{self.clause}]{where}{labels}: {self.detail}"


@dataclasses.dataclass
class Report:
    """Outcome of a verification run; empty ``violations`` means verified."""

    title: str
    checked: int = 0
    violations: list[Violation] = dataclasses.field(default_factory=list)
    facts: dict[str, int] = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def clauses(self) -> set[str]:
        return {violation.clause for violation in self.violations}

    def add(
        self,
        clause: str,
        vertex: int | None,
        labels: tuple[int, ...],
        detail: str,
    ) -> None:
        self.violations.append(Violation(clause, vertex, labels, detail))

    def extend(self, other: Self) -> None:
        self.violations.extend(other.violations)

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.violations)} violation(s)"
        lines = [f"{self.title}: checked {self.checked}, {status}"]
        lines.extend(f"  {key}: {value}" for key, value in self.facts.items())
        lines.extend(f"  {violation}" for violation in self.violations)
        return "\n".join(lines)
