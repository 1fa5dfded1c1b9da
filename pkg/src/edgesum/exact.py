"""Exact edge-chromatic sums by branch and bound, plus the sequential-coloring
decision procedures it is checked against."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .coloring import EdgeColoring
from .graph import BipartitionInfo, Graph, U, W, at_least
from .kernels import vizing_color

DEFAULT_EDGE_LIMIT = 25


@dataclass(frozen=True)
class ExactResult:
    sum: int
    coloring: EdgeColoring | None
    optimal: bool
    nodes_expanded: int

    @property
    def num_colors(self) -> int:
        return self.coloring.num_colors if self.coloring is not None else 0

    def document(self) -> dict:
        return {
            "sum": self.sum,
            "optimal": self.optimal,
            "nodes_expanded": self.nodes_expanded,
            "num_colors": self.num_colors,
            "coloring": self.coloring.document() if self.coloring is not None else None,
        }


class EdgeLimitExceeded(ValueError):
    pass


def general_lower_bound(g: Graph) -> int:
    """``ceil(sum_v d(v)(d(v)+1)/2 / 2)``: each vertex sees at least ``1..d(v)``."""
    total = sum(d * (d + 1) // 2 for d in g.degrees())
    return (total + 1) // 2


def bipartite_onesided_lower_bound(g: Graph, bp: BipartitionInfo, side: str = U) -> int:
    """``sum_i i * |side_{>=i}|``, i.e. the sum of ``d(u)(d(u)+1)/2`` over the side."""
    verts = bp.side(side)
    return sum(i * at_least(g, verts, i) for i in range(1, g.max_degree + 1))


def halved_degree_sum(g: Graph) -> int:
    """``(1/2) sum_i i * |V_{>=i}|``; integral whenever ``|U_i| = |W_i|`` for all i."""
    total = sum(i * at_least(g, range(g.n), i) for i in range(1, g.max_degree + 1))
    return total // 2


def edge_order(g: Graph) -> list[int]:
    """Branching order: descending endpoint-degree sum, ties by edge index."""
    return sorted(range(g.m), key=lambda e: (-(g.degree(g.edges[e][0]) + g.degree(g.edges[e][1])), e))


def twin_chains(g: Graph) -> list[list[int]]:
    """Edge chains whose colors may be assumed strictly increasing.

    Vertices with equal neighborhoods (apart from each other) can be permuted
    by an automorphism. For each such class, the edges from its members to a
    common neighbor outside every twin class get increasing colors in member
    order; classes with no such neighbor are left alone.
    """
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        if g.degree(v) == 0:
            continue
        nb = frozenset(g.neighbors(v))
        groups.setdefault(("open", nb), []).append(v)
        groups.setdefault(("closed", nb | {v}), []).append(v)
    classes = [sorted(vs) for vs in groups.values() if len(vs) > 1]
    in_class = {v for cls in classes for v in cls}
    chains = []
    for cls in classes:
        common = set(g.neighbors(cls[0])) - set(cls)
        witnesses = sorted(w for w in common if w not in in_class)
        if not witnesses:
            continue
        w = witnesses[0]
        chains.append([g.edge_index(x, w) for x in cls])
    return chains


def exact_sum(
    g: Graph,
    time_budget: float | None = None,
    max_color: int | None = None,
    edge_limit: int | None = DEFAULT_EDGE_LIMIT,
) -> ExactResult:
    """Minimum total of a proper edge coloring.

    Colors are searched in ``[1, max_color]`` (default ``2Δ-1``). Only colorings
    where no edge could be moved to a smaller color free at both ends are
    explored; every optimum has that property. ``time_budget`` is in seconds;
    when it runs out the best coloring found so far is returned with
    ``optimal=False``.
    """
    if edge_limit is not None and g.m > edge_limit:
        raise EdgeLimitExceeded(f"{g.m} edges exceeds the exact solver limit of {edge_limit}")
    delta = g.max_degree
    if delta == 0:
        return ExactResult(0, EdgeColoring(()), True, 0)
    cap = max_color if max_color is not None else 2 * delta - 1
    order = edge_order(g)
    m = g.m
    ends = [g.edges[e] for e in order]
    # positions (in branching order) of the edges at each vertex
    at_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for pos, (a, b) in enumerate(ends):
        at_vertex[a].append(pos)
        at_vertex[b].append(pos)
    position = {e: pos for pos, e in enumerate(order)}
    # (earlier, later) pairs in chain order that need col[earlier] < col[later]
    must_exceed: list[list[int]] = [[] for _ in range(m)]
    must_stay_below: list[list[int]] = [[] for _ in range(m)]
    for chain in twin_chains(g):
        for lo, hi in zip(chain, chain[1:]):
            must_exceed[position[hi]].append(position[lo])
            must_stay_below[position[lo]].append(position[hi])
    used = [0] * g.n
    rem = g.degrees()
    col = [0] * m
    below = [(1 << c) - 2 for c in range(cap + 2)]  # bits 1..c-1
    active = [v for v in range(g.n) if rem[v]]
    n = g.n

    best_sum = float("inf")
    best: list[int] | None = None
    # a Δ+1 coloring is the starting incumbent, so an interrupted run still has one
    seed = vizing_color(g)
    if seed.max_color <= cap:
        best = [seed[e] for e in order]
        best_sum = seed.sum
    nodes = 0
    deadline = None if time_budget is None else time.monotonic() + time_budget
    out_of_time = False

    root_bound = general_lower_bound(g)

    def smallest_free_total(mask: int, k: int) -> int:
        total = 0
        c = 1
        while k:
            if not (mask >> c) & 1:
                total += c
                k -= 1
            c += 1
        return total

    def bound(pos: int, partial: int) -> int:
        left = m - pos
        # per-vertex: the remaining edges at v need distinct colors free at v;
        # each edge is seen from both ends, hence the halving
        vertex_total = 0
        for v in active:
            if rem[v]:
                vertex_total += smallest_free_total(used[v], rem[v])
        vb = partial + (vertex_total + 1) // 2
        # orientation: charge each remaining edge to one end only, preferring
        # the end with more remaining edges
        charged = [0] * n
        for a, b in ends[pos:]:
            if rem[a] >= rem[b]:
                charged[a] += 1
            else:
                charged[b] += 1
        ob = partial
        for v in active:
            if charged[v]:
                ob += smallest_free_total(used[v], charged[v])
        if ob > vb:
            vb = ob
        # per-color: a color class among the remaining edges is a matching on
        # vertices that still lack that color
        cb = partial
        need = left
        for c in range(1, cap + 1):
            if not need:
                break
            free = 0
            for v in active:
                if rem[v] and not (used[v] >> c) & 1:
                    free += 1
            usable = 0
            for a, b in ends[pos:]:
                if not ((used[a] | used[b]) >> c) & 1:
                    usable += 1
            take = min(free >> 1, usable, need)
            cb += take * c
            need -= take
        if need:
            return 1 << 60
        return vb if vb > cb else cb

    def locally_optimal(a: int, b: int) -> bool:
        # an edge colored c with some smaller color free at both ends must see
        # that color arrive later at one of its ends
        for x in (a, b):
            for pos in at_vertex[x]:
                c = col[pos]
                if not c:
                    continue
                p, q = ends[pos]
                gap = below[c] & ~used[p] & ~used[q]
                if gap and gap.bit_count() > rem[p] + rem[q]:
                    return False
        return True

    def search(pos: int, partial: int) -> None:
        nonlocal best_sum, best, nodes, out_of_time
        if out_of_time:
            return
        nodes += 1
        if deadline is not None and not nodes & 1023 and time.monotonic() > deadline:
            out_of_time = True
            return
        if pos == m:
            if partial < best_sum:
                best_sum = partial
                best = col[:]
            return
        if bound(pos, partial) >= best_sum:
            return
        a, b = ends[pos]
        taken = used[a] | used[b]
        lowest = 1
        for p in must_exceed[pos]:
            if col[p] >= lowest:
                lowest = col[p] + 1
        highest = cap
        for p in must_stay_below[pos]:
            if col[p] and col[p] <= highest:
                highest = col[p] - 1
        rem[a] -= 1
        rem[b] -= 1
        for c in range(lowest, highest + 1):
            if partial + c >= best_sum:
                break
            if (taken >> c) & 1:
                continue
            bit = 1 << c
            used[a] |= bit
            used[b] |= bit
            col[pos] = c
            if locally_optimal(a, b):
                search(pos + 1, partial + c)
            col[pos] = 0
            used[a] &= ~bit
            used[b] &= ~bit
            if best_sum == root_bound or out_of_time:
                break
        rem[a] += 1
        rem[b] += 1

    search(0, 0)
    if best is None:
        return ExactResult(-1, None, False, nodes)
    colors = [0] * m
    for pos, e in enumerate(order):
        colors[e] = best[pos]
    return ExactResult(int(best_sum), EdgeColoring(tuple(colors)), not out_of_time, nodes)


def decide_sequential(g: Graph, bp: BipartitionInfo, targets: str | Iterable[int] = U) -> bool:
    """Does a Δ-coloring exist in which every target vertex ``v`` sees exactly ``1..d(v)``?

    ``targets`` is ``"U"``, ``"W"``, ``"all"`` or an explicit vertex collection.
    Backtracking with most-constrained-edge selection.
    """
    bp.check(g)
    if targets in (U, W):
        tset = set(bp.side(targets))
    elif targets == "all":
        tset = set(range(g.n))
    else:
        tset = set(targets)
    delta = g.max_degree
    if g.m == 0:
        return True
    # per-edge color ceiling: a target endpoint of degree d only admits 1..d
    ceiling = []
    for a, b in g.edges:
        lim = delta
        if a in tset:
            lim = min(lim, g.degree(a))
        if b in tset:
            lim = min(lim, g.degree(b))
        ceiling.append(lim)
    used = [0] * g.n
    color = [0] * g.m

    def options(e: int) -> list[int]:
        a, b = g.edges[e]
        taken = used[a] | used[b]
        return [c for c in range(1, ceiling[e] + 1) if not (taken >> c) & 1]

    def solve(left: int) -> bool:
        if not left:
            return True
        pick, pick_opts = -1, None
        for e in range(g.m):
            if color[e]:
                continue
            opts = options(e)
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = e, opts
                if not opts:
                    return False
        a, b = g.edges[pick]
        for c in pick_opts:
            color[pick] = c
            used[a] |= 1 << c
            used[b] |= 1 << c
            if solve(left - 1):
                return True
            used[a] &= ~(1 << c)
            used[b] &= ~(1 << c)
            color[pick] = 0
        return False

    return solve(g.m)
