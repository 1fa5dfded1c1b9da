"""Baseline proper edge-colorings: Δ+1 (Vizing), Δ for bipartite graphs, and K_n factorizations."""

from __future__ import annotations

from .coloring import EdgeColoring
from .graph import BipartitionInfo, Graph, GraphError
from .matching import RegularMultigraph


class _FanColoring:
    """Mutable state for the Misra-Gries fan/alternating-path procedure."""

    def __init__(self, g: Graph):
        self.g = g
        self.ncolors = g.max_degree + 1
        self.color = [0] * g.m
        # at[v][c] = neighbor joined to v by the edge of color c
        self.at: list[dict[int, int]] = [{} for _ in range(g.n)]

    def free(self, v: int) -> int:
        used = self.at[v]
        for c in range(1, self.ncolors + 1):
            if c not in used:
                return c
        raise AssertionError(f"no free color at vertex {v}")

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def set(self, u: int, v: int, c: int) -> None:
        e = self.g.edge_index(u, v)
        old = self.color[e]
        if old:
            del self.at[u][old]
            del self.at[v][old]
        self.color[e] = c
        if c:
            self.at[u][c] = v
            self.at[v][c] = u

    def edge_color(self, u: int, v: int) -> int:
        return self.color[self.g.edge_index(u, v)]

    def fan(self, u: int, v: int) -> list[int]:
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            for w in self.g.neighbors(u):
                if w in in_fan:
                    continue
                c = self.edge_color(u, w)
                if c and self.is_free(fan[-1], c):
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        return fan

    def invert_path(self, u: int, c: int, d: int) -> None:
        # u has c free; walk the d/c alternating path leaving u on d.
        path = []
        x, want = u, d
        while want in self.at[x]:
            y = self.at[x][want]
            path.append((x, y, want))
            x, want = y, (c if want == d else d)
        for x, y, _ in path:
            self.set(x, y, 0)
        for x, y, col in path:
            self.set(x, y, c if col == d else d)

    def is_fan_prefix(self, u: int, fan: list[int], k: int) -> bool:
        for j in range(1, k + 1):
            col = self.edge_color(u, fan[j])
            if not col or not self.is_free(fan[j - 1], col):
                return False
        return True

    def color_edge(self, u: int, v: int) -> None:
        fan = self.fan(u, v)
        c = self.free(u)
        d = self.free(fan[-1])
        if c != d:
            self.invert_path(u, c, d)
        for k, w in enumerate(fan):
            if self.is_free(w, d) and self.is_fan_prefix(u, fan, k):
                break
        else:
            raise AssertionError("Misra-Gries: no fan prefix ends at a d-free vertex")
        # rotate the fan prefix ending at fan[k]
        shifted = [self.edge_color(u, fan[j + 1]) for j in range(k)]
        for j in range(k + 1):
            self.set(u, fan[j], 0)
        for j in range(k):
            self.set(u, fan[j], shifted[j])
        self.set(u, fan[k], d)


def vizing_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with colors in ``[1, Δ+1]`` (Misra-Gries, O(mn))."""
    state = _FanColoring(g)
    for u, v in g.edges:
        state.color_edge(u, v)
    return EdgeColoring(tuple(state.color))


def koenig_color(g: Graph, bp: BipartitionInfo) -> EdgeColoring:
    """Proper edge coloring of a bipartite graph with exactly ``Δ`` colors.

    The graph is padded to a Δ-regular bipartite multigraph and split into
    perfect matchings; larger classes (counting real edges) get smaller colors.
    """
    bp.check(g)
    delta = g.max_degree
    if delta == 0:
        return EdgeColoring(())
    rm = RegularMultigraph(g, bp, list(range(g.m)), delta)
    classes = rm.decompose()
    # stable sort keeps extraction order among equal-size classes
    classes.sort(key=len, reverse=True)
    colors = [0] * g.m
    for c, cls in enumerate(classes, 1):
        for e in cls:
            colors[e] = c
    return EdgeColoring(tuple(colors))


def bipartite_color(g: Graph) -> EdgeColoring:
    """``koenig_color`` with the bipartition found by BFS."""
    sides = g.two_coloring()
    if sides is None:
        raise GraphError("graph is not bipartite")
    return koenig_color(g, BipartitionInfo.from_two_coloring(sides))


def clique_factorization(n: int, offset: int = 0) -> tuple[EdgeColoring, list[int] | None]:
    """Circle-method coloring of ``K_n`` (edge order as in ``gen_complete``).

    Even ``n``: colors ``offset+1 .. offset+n-1``, each a perfect matching.
    Odd ``n``: colors ``offset+1 .. offset+n``; class ``offset+j`` is the perfect
    matching of the vertices other than ``j-1`` (0-based), so vertex ``i``
    misses exactly ``offset+i+1``. The second return value lists those missing
    colors for odd ``n`` and is ``None`` for even ``n``.
    """
    if n < 2:
        raise ValueError(f"clique factorization needs n >= 2, got {n}")
    from .generators import gen_complete

    g = gen_complete(n)
    colors = [0] * g.m
    if n % 2 == 0:
        ring = n - 1
        for j in range(ring):
            pairs = [(j, n - 1)]
            pairs += [((j + s) % ring, (j - s) % ring) for s in range(1, n // 2)]
            for a, b in pairs:
                colors[g.edge_index(a, b)] = offset + j + 1
        return EdgeColoring(tuple(colors)), None
    for j in range(n):
        for s in range(1, (n + 1) // 2):
            colors[g.edge_index((j + s) % n, (j - s) % n)] = offset + j + 1
    return EdgeColoring(tuple(colors)), [offset + i + 1 for i in range(n)]
