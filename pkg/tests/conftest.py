import itertools
import random

from hypothesis import strategies as st

from edgesum.graph import BipartitionInfo, Graph


def brute_force_sum(g: Graph, cap: int | None = None) -> int:
    """Minimum sum over every proper coloring with colors in 1..cap (default 2Δ).

    Plain depth-first enumeration in edge-index order; the only pruning is
    dropping partial assignments that are already improper or not cheaper.
    """
    if g.m == 0:
        return 0
    cap = cap or 2 * g.max_degree
    earlier = [
        [f for f in range(e) if set(g.edges[f]) & set(g.edges[e])] for e in range(g.m)
    ]
    cols = [0] * g.m
    best = [None]

    def go(e: int, total: int) -> None:
        if best[0] is not None and total >= best[0]:
            return
        if e == g.m:
            best[0] = total
            return
        for c in range(1, cap + 1):
            if all(cols[f] != c for f in earlier[e]):
                cols[e] = c
                go(e + 1, total + c)
        cols[e] = 0

    go(0, 0)
    return best[0]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_bipartite(rng: random.Random, nu: int, nw: int, p: float, max_degree=None):
    """Random bipartite graph, U = 0..nu-1; edges pruned until degrees fit ``max_degree``."""
    edges = {(i, nu + j) for i in range(nu) for j in range(nw) if rng.random() < p}
    while True:
        g = Graph.from_edges(nu + nw, sorted(edges))
        over = [e for e in sorted(edges)
                if max_degree is not None and max(g.degree(e[0]), g.degree(e[1])) > max_degree]
        if not over:
            return g, BipartitionInfo(("U",) * nu + ("W",) * nw)
        edges.discard(over[rng.randrange(len(over))])


@st.composite
def graphs(draw, max_n=8, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def bipartite_graphs(draw, max_side=5):
    nu = draw(st.integers(1, max_side))
    nw = draw(st.integers(1, max_side))
    pairs = [(i, nu + j) for i in range(nu) for j in range(nw)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph.from_edges(nu + nw, chosen), BipartitionInfo(("U",) * nu + ("W",) * nw)


ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(criterion: int, title: str, ok: bool, detail: str = "") -> bool:
    """Store one acceptance verdict for the end-of-run summary."""
    ACCEPTANCE[criterion] = (title, ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[k]
        line = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
