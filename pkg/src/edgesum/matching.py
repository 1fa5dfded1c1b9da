"""Bipartite matching and the regularize-and-match machinery behind Δ-colorings."""

from __future__ import annotations

from collections import deque

from .graph import BipartitionInfo, Graph, U, W

_INF = float("inf")


def hopcroft_karp(adj: list[list[int]], n_right: int) -> list[int]:
    """Maximum matching of a bipartite graph given as left-vertex adjacency lists.

    Returns ``match[l]`` = matched right vertex or ``-1``. Neighbor lists are
    scanned in order, so the result is deterministic.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0.0] * n_left

    def bfs() -> bool:
        q = deque()
        for l in range(n_left):
            if match_l[l] == -1:
                dist[l] = 0
                q.append(l)
            else:
                dist[l] = _INF
        found = False
        while q:
            l = q.popleft()
            for r in adj[l]:
                nl = match_r[r]
                if nl == -1:
                    found = True
                elif dist[nl] == _INF:
                    dist[nl] = dist[l] + 1
                    q.append(nl)
        return found

    def dfs(l: int) -> bool:
        for r in adj[l]:
            nl = match_r[r]
            if nl == -1 or (dist[nl] == dist[l] + 1 and dfs(nl)):
                match_l[l] = r
                match_r[r] = l
                return True
        dist[l] = _INF
        return False

    while bfs():
        for l in range(n_left):
            if match_l[l] == -1:
                dfs(l)
    return match_l


class RegularMultigraph:
    """A bipartite graph padded out to a ``k``-regular bipartite multigraph.

    Both sides are padded with isolated vertices to a common size, then filler
    edges join vertices with spare degree. Real edges keep their edge id;
    filler edges carry ``None``. Vertices of degree ``k`` in the input receive
    no filler, so any perfect matching saturates them with real edges.
    """

    def __init__(self, g: Graph, bp: BipartitionInfo, edge_ids: list[int], k: int):
        left = bp.side(U)
        right = bp.side(W)
        lpos = {v: i for i, v in enumerate(left)}
        rpos = {v: i for i, v in enumerate(right)}
        size = max(len(left), len(right))
        self.size = size
        self.k = k
        self.left_vertex = left
        self.right_vertex = right
        # (left, right, edge id or None)
        self.edges: list[tuple[int, int, int | None]] = []
        ldeg = [0] * size
        rdeg = [0] * size
        for e in edge_ids:
            a, b = g.edges[e]
            if bp.part_of[a] == W:
                a, b = b, a
            li, ri = lpos[a], rpos[b]
            self.edges.append((li, ri, e))
            ldeg[li] += 1
            rdeg[ri] += 1
        if max(ldeg + rdeg, default=0) > k:
            raise ValueError(f"cannot regularize: a vertex has degree above {k}")
        ri = 0
        for li in range(size):
            while ldeg[li] < k:
                while rdeg[ri] >= k:
                    ri += 1
                take = min(k - ldeg[li], k - rdeg[ri])
                self.edges.extend([(li, ri, None)] * take)
                ldeg[li] += take
                rdeg[ri] += take

    def perfect_matching(self, alive: list[bool]) -> list[int]:
        """Indices into ``self.edges`` of a perfect matching among ``alive`` edges.

        Real edges are preferred over filler between the same pair.
        """
        support: list[dict[int, int]] = [{} for _ in range(self.size)]
        for idx, (l, r, e) in enumerate(self.edges):
            if not alive[idx]:
                continue
            cur = support[l].get(r)
            if cur is None or (self.edges[cur][2] is None and e is not None):
                support[l][r] = idx
        adj = [sorted(s) for s in support]
        match = hopcroft_karp(adj, self.size)
        if -1 in match:
            raise AssertionError("regular bipartite multigraph without a perfect matching")
        return [support[l][r] for l, r in enumerate(match)]

    def decompose(self) -> list[list[int]]:
        """Split all edges into ``k`` perfect matchings; returns real edge ids per class."""
        alive = [True] * len(self.edges)
        classes = []
        for _ in range(self.k):
            pm = self.perfect_matching(alive)
            for idx in pm:
                alive[idx] = False
            classes.append([self.edges[idx][2] for idx in pm if self.edges[idx][2] is not None])
        return classes


def saturating_matching(g: Graph, bp: BipartitionInfo, edge_ids: list[int], k: int) -> list[int]:
    """A matching within ``edge_ids`` covering every vertex whose degree there is ``k``.

    The subgraph must have maximum degree at most ``k``.
    """
    if not edge_ids:
        return []
    rm = RegularMultigraph(g, bp, edge_ids, k)
    pm = rm.perfect_matching([True] * len(rm.edges))
    return sorted(rm.edges[idx][2] for idx in pm if rm.edges[idx][2] is not None)
