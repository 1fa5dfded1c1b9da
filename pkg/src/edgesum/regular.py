"""Approximate edge-chromatic sums of regular graphs and exact values for K_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from .coloring import EdgeColoring, verify_coloring
from .graph import BipartitionInfo, Graph, GraphError
from .kernels import clique_factorization, koenig_color, vizing_color
from .sequential import is_sequential, swap_to_sequential


def regular_lower_bound(n: int, r: int) -> Fraction:
    """``n r (r+1) / 4``: every vertex sees at least colors ``1..r``."""
    return Fraction(n * r * (r + 1), 4)


def regular_upper_bound(n: int, r: int) -> Fraction:
    """Worst-case sum of the swapped (r+1)-coloring: ``n r (r²+4r+1) / (4(r+1))``."""
    return Fraction(n * r * (r * r + 4 * r + 1), 4 * (r + 1))


def ratio_bound(r: int) -> Fraction:
    """``1 + 2r/(r+1)²``."""
    return 1 + Fraction(2 * r, (r + 1) ** 2)


def kn_exact_sum(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return n * (n * n - 1) // 4
    return (n - 1) * n * n // 4


def kn_optimal_coloring(n: int) -> EdgeColoring:
    """Minimum-sum coloring of ``K_n``: a (near-)1-factorization on colors from 1."""
    coloring, _ = clique_factorization(n, 0)
    return coloring


def _kn_index(n: int, u: int, v: int) -> int:
    """Index of edge ``uv`` (``u < v``) in lexicographic ``K_n`` order."""
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ApproxReport:
    n: int
    r: int
    coloring: EdgeColoring
    achieved_sum: int
    lower_bound: Fraction
    formula_upper: Fraction
    ratio_bound: Fraction
    sequential_vertices: frozenset[int]
    initial_coloring: str

    @property
    def sequential_set_size(self) -> int:
        return len(self.sequential_vertices)

    @property
    def achieved_ratio(self) -> Fraction:
        """Achieved sum over the lower bound (an upper estimate of the true ratio)."""
        if self.lower_bound == 0:
            return Fraction(1)
        return Fraction(self.achieved_sum) / self.lower_bound

    @property
    def below_hardness_range(self) -> bool:
        """The problem is only known to be hard for r >= 3."""
        return self.r < 3

    def document(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "achieved_sum": frac_str(Fraction(self.achieved_sum)),
            "lower_bound": frac_str(self.lower_bound),
            "formula_upper": frac_str(self.formula_upper),
            "ratio_bound": frac_str(self.ratio_bound),
            "sequential_set_size": self.sequential_set_size,
            "sequential_vertices": sorted(self.sequential_vertices),
            "initial_coloring": self.initial_coloring,
            "below_hardness_range": self.below_hardness_range,
            "coloring": self.coloring.document(),
        }


def approx_sum_regular(g: Graph, initial: str = "auto") -> ApproxReport:
    """Color an r-regular graph with at most r+1 colors so that at least
    ``ceil(n/(r+1))`` vertices see exactly ``1..r``.

    ``initial`` picks the first (r+1)-coloring: ``"vizing"`` always uses the
    fan/alternating-path kernel; ``"auto"`` uses the circle-method
    factorization for complete graphs, the bipartite Δ-coloring for bipartite
    graphs and the fan kernel otherwise.
    """
    r = g.regularity()
    if r is None:
        raise GraphError("regularity required")
    sides = g.two_coloring() if initial == "auto" else None
    if initial == "auto" and g.n >= 2 and r == g.n - 1:
        kn = kn_optimal_coloring(g.n)
        alpha = EdgeColoring(tuple(kn[_kn_index(g.n, u, v)] for u, v in g.edges))
        used = "clique-factorization"
    elif sides is not None and g.m:
        alpha = koenig_color(g, BipartitionInfo.from_two_coloring(sides))
        used = "koenig"
    elif initial in ("auto", "vizing"):
        alpha = vizing_color(g)
        used = "vizing"
    else:
        raise ValueError(f"unknown initial coloring {initial!r}")
    beta, R = swap_to_sequential(g, alpha)
    if not verify_coloring(g, beta).proper or not is_sequential(g, beta, R):
        raise AssertionError("swapped coloring lost properness or sequentiality")
    if len(R) < ceil(g.n / (r + 1)):
        raise AssertionError("sequential set smaller than ceil(n/(r+1))")
    return ApproxReport(
        n=g.n,
        r=r,
        coloring=beta,
        achieved_sum=beta.sum,
        lower_bound=regular_lower_bound(g.n, r),
        formula_upper=regular_upper_bound(g.n, r),
        ratio_bound=ratio_bound(r),
        sequential_vertices=R,
        initial_coloring=used,
    )
