"""Undirected simple graphs and the partition metadata attached to them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when a graph or its partition metadata violates an invariant."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as normalized pairs ``(u, v)`` with ``u < v``; the edge
    index is the position in ``edges`` and is what colorings are keyed by.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False
    )
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normalized = []
        index: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} ({u}, {v}) has a vertex out of range 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"duplicate edge {key}")
            index[key] = i
            normalized.append(key)
            adj[u].append((v, i))
            adj[v].append((u, i))
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(e[0]), int(e[1])) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises ``KeyError`` if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def regularity(self) -> int | None:
        """Common degree ``r`` if the graph is regular, else ``None``."""
        degs = set(self.degrees())
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def subgraph(self, edge_ids: Iterable[int]) -> tuple["Graph", list[int]]:
        """Spanning subgraph on the given edges, plus the map back to parent edge ids."""
        ids = sorted(edge_ids)
        return Graph(self.n, tuple(self.edges[i] for i in ids)), ids

    def two_coloring(self) -> list[int] | None:
        """A proper vertex 2-coloring (0/1 per vertex) or ``None`` if not bipartite."""
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] != -1:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y, _ in self.adjacency[x]:
                    if side[y] == -1:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return None
        return side

    def audit(self) -> None:
        """Re-check the structural invariants; raises ``GraphError`` on failure."""
        if sum(self.degrees()) != 2 * self.m:
            raise GraphError("degree sum differs from 2m")
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphError(f"loop on edge {i}")
            if (v, i) not in self.adjacency[u] or (u, i) not in self.adjacency[v]:
                raise GraphError(f"adjacency out of sync for edge {i}")
        if len(set(self.edges)) != self.m:
            raise GraphError("duplicate edges")


U, W = "U", "W"


@dataclass(frozen=True)
class BipartitionInfo:
    """Side label (``"U"`` or ``"W"``) for every vertex."""

    part_of: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "part_of", tuple(self.part_of))
        bad = [x for x in self.part_of if x not in (U, W)]
        if bad:
            raise GraphError(f"bipartition labels must be 'U' or 'W', got {bad[0]!r}")

    @classmethod
    def from_two_coloring(cls, sides: Sequence[int]) -> "BipartitionInfo":
        return cls(tuple(U if s == 0 else W for s in sides))

    def side(self, label: str) -> list[int]:
        return [v for v, p in enumerate(self.part_of) if p == label]

    def check(self, g: Graph) -> None:
        if len(self.part_of) != g.n:
            raise GraphError(f"bipartition has {len(self.part_of)} labels for {g.n} vertices")
        for u, v in g.edges:
            if self.part_of[u] == self.part_of[v]:
                raise GraphError(f"edge ({u}, {v}) joins two {self.part_of[u]}-vertices")

    def degree_classes(self, g: Graph, label: str) -> dict[int, int]:
        """``{i: |X_i|}`` for side ``X``: how many side vertices have degree ``i``."""
        counts: dict[int, int] = {}
        for v in self.side(label):
            d = g.degree(v)
            counts[d] = counts.get(d, 0) + 1
        return counts


def at_least(g: Graph, vertices: Iterable[int], i: int) -> int:
    """Number of the given vertices with degree at least ``i``."""
    return sum(1 for v in vertices if g.degree(v) >= i)


@dataclass(frozen=True)
class SplitDecomposition:
    """A split graph with its declared clique ``C`` and independent set ``I``.

    ``H`` keeps the clique-to-independent edges and ``Hprime`` the clique edges;
    both are spanning subgraphs of the parent graph, with ``h_edges`` and
    ``hprime_edges`` mapping their edge indices back to the parent.
    """

    graph: Graph
    clique: tuple[int, ...]
    independent: tuple[int, ...]
    H: Graph = field(init=False, repr=False, compare=False)
    Hprime: Graph = field(init=False, repr=False, compare=False)
    h_edges: tuple[int, ...] = field(init=False, repr=False, compare=False)
    hprime_edges: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        g = self.graph
        clique = tuple(int(v) for v in self.clique)
        indep = tuple(int(v) for v in self.independent)
        object.__setattr__(self, "clique", clique)
        object.__setattr__(self, "independent", indep)
        if sorted(clique + indep) != list(range(g.n)):
            raise GraphError("split partition must list every vertex exactly once")
        for a in range(len(clique)):
            for b in range(a + 1, len(clique)):
                if not g.has_edge(clique[a], clique[b]):
                    raise GraphError(f"clique vertices {clique[a]} and {clique[b]} are not adjacent")
        in_clique = set(clique)
        h, hp = [], []
        for i, (u, v) in enumerate(g.edges):
            cu, cv = u in in_clique, v in in_clique
            if not cu and not cv:
                raise GraphError(f"edge ({u}, {v}) lies inside the independent set")
            (hp if cu and cv else h).append(i)
        object.__setattr__(self, "h_edges", tuple(h))
        object.__setattr__(self, "hprime_edges", tuple(hp))
        object.__setattr__(self, "H", Graph(g.n, tuple(g.edges[i] for i in h)))
        object.__setattr__(self, "Hprime", Graph(g.n, tuple(g.edges[i] for i in hp)))

    @property
    def delta_I(self) -> int:
        return max((self.graph.degree(v) for v in self.independent), default=0)

    def bipartition(self) -> BipartitionInfo:
        """``H`` as a bipartite graph: clique on side U, independent set on side W."""
        in_clique = set(self.clique)
        return BipartitionInfo(tuple(U if v in in_clique else W for v in range(self.graph.n)))

    def audit(self) -> None:
        k = len(self.clique)
        if set(self.h_edges) & set(self.hprime_edges):
            raise GraphError("H and H' share an edge")
        if len(self.h_edges) + len(self.hprime_edges) != self.graph.m:
            raise GraphError("H and H' do not cover E(G)")
        for u in self.clique:
            if self.H.degree(u) != self.graph.degree(u) - (k - 1):
                raise GraphError(f"degree identity fails at clique vertex {u}")
        for v in self.independent:
            if self.H.degree(v) != self.graph.degree(v):
                raise GraphError(f"degree identity fails at independent vertex {v}")
