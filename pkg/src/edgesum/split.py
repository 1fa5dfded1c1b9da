"""Upper bounds on the edge-chromatic sum of split graphs and colorings attaining them.

For a split graph with clique ``C`` (size ``n``) and independent set ``I``, the
edges split into the bipartite part ``H`` (clique to independent set) and the
clique ``H'``. Two strategies combine a sequential coloring of ``H`` with a
(near-)1-factorization of ``H'``:

* ``A``: ``H`` on low colors, the clique on a block of colors just above them;
* ``B``: the clique on colors from 1, ``H`` shifted above the clique's colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import EdgeColoring, merge_colorings, shift_colors, verify_coloring
from .generators import gen_complete, split_condition_holds
from .graph import GraphError, SplitDecomposition, U, W
from .kernels import clique_factorization
from .regular import kn_exact_sum
from .sequential import u_sequential_color

CONDITIONS = ("thm10", "thm11")


class SplitConditionError(GraphError):
    pass


def applicable_conditions(sd: SplitDecomposition) -> list[str]:
    return [c for c in CONDITIONS if split_condition_holds(sd, c)]


def _quarter(x: int) -> int:
    if x % 4:
        raise AssertionError(f"{x} is not divisible by 4")
    return x // 4


def split_formula_bounds(sd: SplitDecomposition, condition: str | None = None) -> tuple[int, int]:
    """``(term_clique_high, term_clique_low)``, the two upper-bound terms.

    With ``condition=None`` the first applicable condition is used.
    """
    condition = _resolve(sd, condition)
    g = sd.graph
    n = len(sd.clique)
    odd = n % 2
    if condition == "thm10":
        delta = g.max_degree
        dc = [g.degree(u) for u in sd.clique]
        h_part = sum((d - n + 1) * (d - n + 2) // 2 for d in dc)
        high = h_part + _quarter((2 * delta - n + 2 + odd) * n * (n - 1))
        low = kn_exact_sum(n) + sum((d - n + 1) * (d + n + 2 * odd) // 2 for d in dc)
    else:
        di = [g.degree(v) for v in sd.independent]
        delta_i = sd.delta_I
        h_part = sum(d * (d + 1) // 2 for d in di)
        high = h_part + _quarter((2 * delta_i + n + odd) * n * (n - 1))
        low = kn_exact_sum(n) + sum(d * (d + 2 * n - 1 + 2 * odd) // 2 for d in di)
    return high, low


def _resolve(sd: SplitDecomposition, condition: str | None) -> str:
    ok = applicable_conditions(sd)
    if condition is None:
        if not ok:
            raise SplitConditionError("split graph satisfies neither degree condition")
        return ok[0]
    if condition not in CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}")
    if condition not in ok:
        raise SplitConditionError(f"split graph violates the {condition} degree condition")
    return condition


@dataclass(frozen=True)
class SplitBoundReport:
    condition: str
    parity: str
    term_clique_high: int
    term_clique_low: int
    bound: int
    coloring: EdgeColoring
    strategy_chosen: str
    alternatives: dict = field(default_factory=dict, compare=False)

    def document(self) -> dict:
        return {
            "condition": self.condition,
            "parity": self.parity,
            "term_clique_high": self.term_clique_high,
            "term_clique_low": self.term_clique_low,
            "bound": self.bound,
            "strategy_chosen": self.strategy_chosen,
            "alternatives": self.alternatives,
            "coloring": self.coloring.document(),
        }


def _clique_coloring(sd: SplitDecomposition, offset: int) -> EdgeColoring:
    """Factorization of ``H'`` with clique vertex ``clique[i]`` playing K_n vertex ``i``."""
    n = len(sd.clique)
    if n < 2:
        return EdgeColoring(())
    kn, _ = clique_factorization(n, offset)
    g_kn = gen_complete(n)
    g = sd.graph
    colors = []
    for e in sd.hprime_edges:
        a, b = g.edges[e]
        colors.append(kn[g_kn.edge_index(sd.clique.index(a), sd.clique.index(b))])
    return EdgeColoring(tuple(colors))


def _h_coloring(sd: SplitDecomposition, condition: str) -> EdgeColoring:
    """Sequential Δ-coloring of ``H``: clique-sequential (thm10) or independent-sequential (thm11)."""
    side = U if condition == "thm10" else W
    # sd.H lists exactly the h_edges, in order, so its coloring indexes align
    return u_sequential_color(sd.H, sd.bipartition(), side)


def _strategies(sd: SplitDecomposition, condition: str) -> dict[str, EdgeColoring]:
    g = sd.graph
    n = len(sd.clique)
    alpha = _h_coloring(sd, condition)
    if condition == "thm10":
        if g.m and n >= 1 and max(g.degree(u) for u in sd.clique) != g.max_degree:
            raise AssertionError("maximum degree not attained on the clique")
        offset = g.max_degree - n + 1
        h_ceiling = max((sd.H.degree(u) for u in sd.clique), default=0)
    else:
        offset = sd.delta_I
        h_ceiling = sd.delta_I
    if alpha.max_color > h_ceiling:
        raise AssertionError("H-coloring exceeds its color range")
    clique_high = _clique_coloring(sd, offset)
    a = merge_colorings(g.m, [(sd.h_edges, alpha), (sd.hprime_edges, clique_high)])
    # clique colors at every clique vertex must sit above its H colors
    for u in sd.clique:
        h_cols = {alpha[sd.h_edges.index(e)] for _, e in g.adjacency[u] if e in sd.h_edges}
        if h_cols and n >= 2 and max(h_cols) > offset:
            raise AssertionError(f"H and clique colors overlap at vertex {u}")
    shift = n if n % 2 else n - 1
    b = merge_colorings(
        g.m, [(sd.h_edges, shift_colors(alpha, shift)), (sd.hprime_edges, _clique_coloring(sd, 0))]
    )
    return {"A": a, "B": b}


def split_color(sd: SplitDecomposition, condition: str | None = None) -> SplitBoundReport:
    """Build both strategy colorings, check them against the formulas, keep the cheaper.

    With ``condition=None`` every applicable condition is tried and the best
    certified bound wins.
    """
    conditions = [_resolve(sd, condition)] if condition else applicable_conditions(sd)
    if not conditions:
        raise SplitConditionError("split graph satisfies neither degree condition")
    g = sd.graph
    best = None
    alternatives = {}
    for cond in conditions:
        high, low = split_formula_bounds(sd, cond)
        colorings = _strategies(sd, cond)
        for name, term in (("A", high), ("B", low)):
            report = verify_coloring(g, colorings[name])
            if not report.proper:
                raise AssertionError(f"{cond} strategy {name} produced an improper coloring")
            if report.sum != term:
                raise AssertionError(
                    f"{cond} strategy {name}: coloring sum {report.sum} != formula {term}"
                )
        alternatives[cond] = {"term_clique_high": high, "term_clique_low": low}
        strategy = "A" if high <= low else "B"
        candidate = (min(high, low), cond, strategy, high, low, colorings[strategy])
        if best is None or candidate[0] < best[0]:
            best = candidate
    bound, cond, strategy, high, low, coloring = best
    return SplitBoundReport(
        condition=cond,
        parity="odd" if len(sd.clique) % 2 else "even",
        term_clique_high=high,
        term_clique_low=low,
        bound=bound,
        coloring=coloring,
        strategy_chosen=strategy,
        alternatives=alternatives,
    )
