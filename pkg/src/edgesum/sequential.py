"""Sequential colorings: missing-color tables, the color swap for regular
graphs, and U-sequential Δ-colorings of bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coloring import ColoringError, EdgeColoring, verify_coloring
from .graph import BipartitionInfo, Graph, GraphError, U, W
from .matching import saturating_matching


@dataclass(frozen=True)
class MissingColorTable:
    """``missing[i-1]`` holds the vertices that do not see color ``i``."""

    missing: tuple[frozenset[int], ...]
    i0: int
    R: frozenset[int]

    def vertices_missing(self, color: int) -> frozenset[int]:
        return self.missing[color - 1]


def missing_sets(g: Graph, c: EdgeColoring, t: int) -> MissingColorTable:
    if len(c) != g.m:
        raise ColoringError(f"coloring has {len(c)} entries for {g.m} edges")
    if c.max_color > t:
        raise ColoringError(f"color {c.max_color} exceeds the palette size {t}")
    sets = c.color_sets(g)
    missing = tuple(
        frozenset(v for v in range(g.n) if i not in sets[v]) for i in range(1, t + 1)
    )
    sizes = [len(s) for s in missing]
    i0 = sizes.index(max(sizes)) + 1
    return MissingColorTable(missing, i0, missing[i0 - 1])


def is_sequential(g: Graph, c: EdgeColoring, targets: Iterable[int]) -> bool:
    """True iff every target vertex ``v`` sees exactly the colors ``1..d(v)``."""
    sets = c.color_sets(g)
    return all(sets[v] == set(range(1, g.degree(v) + 1)) for v in targets)


def swap_to_sequential(g: Graph, c: EdgeColoring) -> tuple[EdgeColoring, frozenset[int]]:
    """Exchange colors ``i0`` and ``r+1`` so that the vertices missing ``i0``
    end up seeing exactly ``1..r``.

    ``i0`` is the smallest color missing at the most vertices; at least
    ``ceil(n/(r+1))`` vertices miss it.
    """
    r = g.regularity()
    if r is None:
        raise GraphError("regularity required")
    report = verify_coloring(g, c)
    if not report.proper:
        raise ColoringError(f"improper input coloring ({len(report.violations)} violations)")
    table = missing_sets(g, c, r + 1)
    top = r + 1
    if table.i0 == top:
        return c, table.R
    swap = {table.i0: top, top: table.i0}
    return EdgeColoring(tuple(swap.get(x, x) for x in c.colors)), table.R


def _dominance_witness(g: Graph, bp: BipartitionInfo, side: str, degree) -> tuple[int, int] | None:
    for a, b in g.edges:
        u, w = (a, b) if bp.part_of[a] == side else (b, a)
        if degree(u) < degree(w):
            return u, w
    return None


class DominanceError(GraphError):
    def __init__(self, u: int, w: int, du: int, dw: int):
        super().__init__(f"dominance condition fails on edge ({u}, {w}): d({u})={du} < d({w})={dw}")
        self.edge = (u, w)


def u_sequential_color(g: Graph, bp: BipartitionInfo, side: str = U) -> EdgeColoring:
    """Δ-coloring in which every vertex ``u`` on ``side`` sees exactly ``1..d(u)``.

    Requires ``d(u) >= d(w)`` for every edge with ``u`` on ``side``. Colors are
    peeled from Δ down: at level ``k`` a matching that covers every current
    degree-``k`` vertex among the edges at degree-``k`` side vertices gets
    color ``k`` and is removed.
    """
    if side not in (U, W):
        raise ValueError(f"side must be 'U' or 'W', got {side!r}")
    bp.check(g)
    witness = _dominance_witness(g, bp, side, g.degree)
    if witness is not None:
        u, w = witness
        raise DominanceError(u, w, g.degree(u), g.degree(w))
    # orient the bipartition so that the chosen side is "U" for the matching kernel
    oriented = bp if side == U else BipartitionInfo(tuple(W if p == U else U for p in bp.part_of))

    colors = [0] * g.m
    deg = g.degrees()
    remaining = set(range(g.m))
    for k in range(g.max_degree, 0, -1):
        level = [
            e for e in sorted(remaining)
            if any(oriented.part_of[x] == U and deg[x] == k for x in g.edges[e])
        ]
        matching = saturating_matching(g, oriented, level, k)
        covered = {x for e in matching for x in g.edges[e]}
        for x in range(g.n):
            if deg[x] == k and x not in covered:
                raise AssertionError(f"level {k}: degree-{k} vertex {x} left unmatched")
        for e in matching:
            colors[e] = k
            remaining.discard(e)
            for x in g.edges[e]:
                deg[x] -= 1
        bad = _dominance_witness(
            Graph(g.n, tuple(g.edges[e] for e in sorted(remaining))), oriented, U,
            lambda x: deg[x],
        )
        if bad is not None:
            raise AssertionError(f"dominance lost after peeling level {k} at edge {bad}")
    if remaining:
        raise AssertionError("edges left uncolored after peeling")
    return EdgeColoring(tuple(colors))


def sequential_sum(g: Graph, vertices: Iterable[int]) -> int:
    """``sum d(u)(d(u)+1)/2`` over the given vertices."""
    return sum(g.degree(u) * (g.degree(u) + 1) // 2 for u in vertices)
