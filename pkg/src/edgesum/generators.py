"""Seeded instance generators for the graph families handled by the package.

Every generator is a pure function of its arguments: randomness comes from a
private ``random.Random(seed)``.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from .graph import BipartitionInfo, Graph, GraphError, SplitDecomposition, U, W

RETRY_CAP = 1000


class GenerationError(ValueError):
    pass


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GenerationError(f"K_n needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GenerationError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gen_complete_bipartite(a: int, b: int) -> tuple[Graph, BipartitionInfo]:
    g = Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    return g, BipartitionInfo((U,) * a + (W,) * b)


def _pair_stubs(rng: random.Random, n: int, r: int) -> set[tuple[int, int]] | None:
    """One pass of incremental stub pairing; None when the remaining stubs cannot be matched."""
    need = [r] * n
    edges: set[tuple[int, int]] = set()
    while True:
        open_vs = [v for v in range(n) if need[v]]
        if not open_vs:
            return edges
        a = rng.choice([v for v in open_vs for _ in range(need[v])])
        partners = [
            v for v in open_vs if v != a and (min(a, v), max(a, v)) not in edges
            for _ in range(need[v])
        ]
        if not partners:
            return None
        b = rng.choice(partners)
        edges.add((min(a, b), max(a, b)))
        need[a] -= 1
        need[b] -= 1


def gen_random_regular(n: int, r: int, seed: int | None = None) -> Graph:
    """Simple r-regular graph by seeded incremental stub pairing with restarts."""
    if n < 1 or r < 0:
        raise GenerationError(f"invalid parameters n={n}, r={r}")
    if (n * r) % 2:
        raise GenerationError(f"n·r must be even (n={n}, r={r})")
    if r >= n:
        raise GenerationError(f"need r < n (n={n}, r={r})")
    rng = random.Random(seed)
    for _ in range(RETRY_CAP):
        edges = _pair_stubs(rng, n, r)
        if edges is not None:
            return Graph.from_edges(n, sorted(edges))
    raise GenerationError(f"pairing model failed {RETRY_CAP} times for n={n}, r={r}")


def _dominant_edges(
    rng: random.Random, big: Sequence[int], small: Sequence[int]
) -> list[tuple[int, int]] | None:
    """Greedy bipartite realization where ``big[i]`` may join ``small[j]`` iff big[i] >= small[j].

    Allowed neighborhoods are nested, so serving the most constrained
    big-side vertex first and always taking the small-side vertices with the
    largest remaining demand is exact: it fails only when no realization exists.
    """
    demand = list(small)
    edges = []
    order = sorted(range(len(big)), key=lambda i: (big[i], rng.random()))
    for i in order:
        allowed = [j for j in range(len(small)) if small[j] <= big[i] and demand[j] > 0]
        if len(allowed) < big[i]:
            return None
        allowed.sort(key=lambda j: (-demand[j], rng.random()))
        for j in allowed[: big[i]]:
            demand[j] -= 1
            edges.append((i, j))
    if any(demand):
        return None
    return edges


def _mix_dominant(rng, edges, big, small, rounds):
    """Random degree-preserving switches that keep the graph simple and dominant."""
    present = set(edges)
    edges = list(edges)
    for _ in range(rounds):
        if len(edges) < 2:
            break
        x, y = rng.sample(range(len(edges)), 2)
        (a, b), (c, d) = edges[x], edges[y]
        if a == c or b == d or (a, d) in present or (c, b) in present:
            continue
        if small[d] > big[a] or small[b] > big[c]:
            continue
        present -= {(a, b), (c, d)}
        present |= {(a, d), (c, b)}
        edges[x], edges[y] = (a, d), (c, b)
    return sorted(edges)


def gen_bipartite_dominant(
    u_degrees: Sequence[int], w_degrees: Sequence[int], seed: int | None = None
) -> tuple[Graph, BipartitionInfo]:
    """Bipartite graph with the given side degrees and d(u) >= d(w) on every edge.

    U-vertices are ``0..len(u)-1`` followed by the W-vertices.
    """
    u_degrees, w_degrees = list(u_degrees), list(w_degrees)
    if any(d < 0 for d in u_degrees + w_degrees):
        raise GenerationError("degrees must be non-negative")
    if sum(u_degrees) != sum(w_degrees):
        raise GenerationError(
            f"infeasible degree plan: side sums differ ({sum(u_degrees)} vs {sum(w_degrees)})"
        )
    rng = random.Random(seed)
    edges = _dominant_edges(rng, u_degrees, w_degrees)
    if edges is None:
        raise GenerationError("infeasible degree plan under the dominance condition")
    edges = _mix_dominant(rng, edges, u_degrees, w_degrees, 10 * len(edges))
    nu = len(u_degrees)
    g = Graph.from_edges(nu + len(w_degrees), [(a, nu + b) for a, b in edges])
    return g, BipartitionInfo((U,) * nu + (W,) * len(w_degrees))


def gen_bipartite_degrees(
    u_degrees: Sequence[int], w_degrees: Sequence[int], seed: int | None = None
) -> tuple[Graph, BipartitionInfo]:
    """Simple bipartite graph with prescribed side degrees (pairing with rejection)."""
    if sum(u_degrees) != sum(w_degrees):
        raise GenerationError("side degree sums differ")
    nu = len(u_degrees)
    if any(d > len(w_degrees) for d in u_degrees) or any(d > nu for d in w_degrees):
        raise GenerationError("a degree exceeds the opposite side's size")
    rng = random.Random(seed)
    left = [i for i, d in enumerate(u_degrees) for _ in range(d)]
    right = [j for j, d in enumerate(w_degrees) for _ in range(d)]
    for _ in range(RETRY_CAP):
        rng.shuffle(right)
        pairs = set(zip(left, right))
        if len(pairs) == len(left):
            g = Graph.from_edges(nu + len(w_degrees), sorted((a, nu + b) for a, b in pairs))
            return g, BipartitionInfo((U,) * nu + (W,) * len(w_degrees))
    raise GenerationError(f"pairing failed {RETRY_CAP} times")


def random_dominant_plan(
    n_u: int, n_w: int, p: float, seed: int | None = None, max_degree: int | None = None
) -> tuple[list[int], list[int]]:
    """A feasible dominance degree plan, read off a random bipartite graph after
    deleting edges that break ``d(u) >= d(w)`` (and, optionally, degree caps)."""
    rng = random.Random(seed)
    edges = {(i, j) for i in range(n_u) for j in range(n_w) if rng.random() < p}
    while True:
        du = [0] * n_u
        dw = [0] * n_w
        for i, j in edges:
            du[i] += 1
            dw[j] += 1
        bad = sorted(
            (i, j)
            for i, j in edges
            if du[i] < dw[j] or (max_degree is not None and max(du[i], dw[j]) > max_degree)
        )
        if not bad:
            return du, dw
        edges.discard(bad[rng.randrange(len(bad))])


def gen_split(
    clique_size: int,
    independent_size: int,
    condition: str,
    seed: int | None = None,
    p: float = 0.5,
) -> tuple[Graph, SplitDecomposition]:
    """Random split graph meeting the requested edge-wise degree condition.

    ``thm10``: d(u) - d(v) >= |C| - 1 on every clique/independent edge, i.e.
    d_H(u) >= d_H(v); ``thm11``: the reverse inequality. Clique vertices are
    ``0..clique_size-1``.
    """
    if clique_size < 1 or independent_size < 1:
        raise GenerationError("split sizes must be >= 1")
    if condition not in ("thm10", "thm11"):
        raise GenerationError(f"unknown condition {condition!r}")
    rng = random.Random(seed)
    if condition == "thm10":
        du, dw = random_dominant_plan(clique_size, independent_size, p, rng.randrange(2**32))
        h, _ = gen_bipartite_dominant(du, dw, rng.randrange(2**32))
        cross = [(a, b) for a, b in h.edges]
    else:
        di, dc = random_dominant_plan(independent_size, clique_size, p, rng.randrange(2**32))
        h, _ = gen_bipartite_dominant(di, dc, rng.randrange(2**32))
        # h has independent vertices first; relabel so the clique comes first
        cross = [(b - independent_size, clique_size + a) for a, b in h.edges]
    n = clique_size + independent_size
    edges = list(itertools.combinations(range(clique_size), 2)) + cross
    g = Graph.from_edges(n, sorted(edges))
    sd = SplitDecomposition(g, tuple(range(clique_size)), tuple(range(clique_size, n)))
    if split_condition_holds(sd, condition) is False:
        raise GraphError("generated split graph violates its condition")
    return g, sd


def split_condition_holds(sd: SplitDecomposition, condition: str) -> bool:
    g = sd.graph
    k = len(sd.clique)
    in_clique = set(sd.clique)
    for e in sd.h_edges:
        a, b = g.edges[e]
        u, v = (a, b) if a in in_clique else (b, a)
        diff = g.degree(u) - g.degree(v)
        if condition == "thm10" and diff < k - 1:
            return False
        if condition == "thm11" and diff > k - 1:
            return False
    return True
