"""Edge colorings, their verification and color arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    """Positive integer color per edge index of some graph."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        for i, c in enumerate(colors):
            if c < 1:
                raise ColoringError(f"edge {i} has non-positive color {c}")
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, edge: int) -> int:
        return self.colors[edge]

    @property
    def sum(self) -> int:
        return sum(self.colors)

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def color_sets(self, g: Graph) -> list[set[int]]:
        """``S(v)``: the colors on edges at each vertex."""
        return [{self.colors[e] for _, e in g.adjacency[v]} for v in range(g.n)]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, []).append(e)
        return out

    def document(self) -> dict:
        return {"colors": list(self.colors), "sum": self.sum, "max_color": self.max_color}


@dataclass(frozen=True)
class VerificationReport:
    proper: bool
    sum: int
    max_color: int
    color_sets: tuple[frozenset[int], ...]
    violations: tuple[tuple[int, int], ...]

    def document(self) -> dict:
        return {
            "proper": self.proper,
            "sum": self.sum,
            "max_color": self.max_color,
            "violations": [list(v) for v in self.violations],
        }


def verify_coloring(g: Graph, c: EdgeColoring) -> VerificationReport:
    """Check properness; ``violations`` lists every adjacent same-colored edge pair."""
    if len(c) != g.m:
        raise ColoringError(f"coloring has {len(c)} entries for {g.m} edges")
    violations = set()
    for v in range(g.n):
        by_color: dict[int, list[int]] = {}
        for _, e in g.adjacency[v]:
            by_color.setdefault(c[e], []).append(e)
        for group in by_color.values():
            for a in range(len(group)):
                for b in range(a + 1, len(group)):
                    violations.add((min(group[a], group[b]), max(group[a], group[b])))
    sets = tuple(frozenset(s) for s in c.color_sets(g))
    return VerificationReport(
        proper=not violations,
        sum=c.sum,
        max_color=c.max_color,
        color_sets=sets,
        violations=tuple(sorted(violations)),
    )


def is_proper(g: Graph, c: EdgeColoring) -> bool:
    return verify_coloring(g, c).proper


def shift_colors(c: EdgeColoring, k: int) -> EdgeColoring:
    if k < 0:
        raise ColoringError(f"shift must be non-negative, got {k}")
    return EdgeColoring(tuple(x + k for x in c.colors))


def merge_colorings(m: int, parts: Iterable[tuple[Iterable[int], EdgeColoring]]) -> EdgeColoring:
    """Assemble a coloring of ``m`` edges from colorings of edge-disjoint subgraphs.

    Each part pairs the parent edge ids of a subgraph with a coloring of it.
    """
    colors = [0] * m
    for ids, sub in parts:
        for local, parent in enumerate(ids):
            colors[parent] = sub[local]
    if 0 in colors:
        raise ColoringError(f"edge {colors.index(0)} left uncolored")
    return EdgeColoring(tuple(colors))
