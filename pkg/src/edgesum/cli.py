"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 precondition failure,
3 exact search stopped by its budget before proving optimality.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import generators as gen
from .coloring import ColoringError, EdgeColoring, verify_coloring
from .exact import EdgeLimitExceeded, exact_sum, general_lower_bound
from .graph import BipartitionInfo, Graph, GraphError, SplitDecomposition, U, W
from .io import ParsedGraph, ParseError, graph_document, read_graph, to_dimacs
from .regular import approx_sum_regular, frac_str, kn_exact_sum, ratio_bound
from .sequential import is_sequential, sequential_sum, u_sequential_color
from .split import split_color

EXIT_OK, EXIT_INTERNAL, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3

BENCH_COLUMNS = [
    "family", "n", "m", "r_or_delta", "lower_bound", "achieved_sum",
    "exact_sum", "formula_upper", "ratio", "checks",
]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str | None
    gen: str | None
    seed: int
    format: str
    budget_ms: int | None
    condition: str | None
    output: str | None
    side: str = U
    coloring: str | None = None
    corpus: str = "all"
    instances: int = 5
    jobs: int = 1


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def generate(spec: str, seed: int = 0) -> ParsedGraph:
    """Build a graph from a generator spec such as ``complete:5``,
    ``random-regular:10,3`` or ``split:3,2,thm11``."""
    name, _, args = spec.partition(":")
    try:
        if name == "complete":
            return ParsedGraph(gen.gen_complete(*_ints(args)))
        if name == "cycle":
            return ParsedGraph(gen.gen_cycle(*_ints(args)))
        if name == "path":
            return ParsedGraph(gen.gen_path(*_ints(args)))
        if name == "petersen":
            return ParsedGraph(gen.gen_petersen())
        if name == "random-regular":
            n, r = _ints(args)
            return ParsedGraph(gen.gen_random_regular(n, r, seed))
        if name == "complete-bipartite":
            g, bp = gen.gen_complete_bipartite(*_ints(args))
            return ParsedGraph(g, bp)
        if name == "bipartite-dominant":
            # bipartite-dominant:3+1,2+1+1  (U degrees, W degrees)
            left, right = args.split(",")
            g, bp = gen.gen_bipartite_dominant(
                [int(x) for x in left.split("+")], [int(x) for x in right.split("+")], seed
            )
            return ParsedGraph(g, bp)
        if name == "random-dominant":
            nu, nw = _ints(args)[:2]
            du, dw = gen.random_dominant_plan(nu, nw, 0.5, seed)
            g, bp = gen.gen_bipartite_dominant(du, dw, seed)
            return ParsedGraph(g, bp)
        if name == "split":
            c, i, cond = args.split(",")
            g, sd = gen.gen_split(int(c), int(i), cond, seed)
            return ParsedGraph(g, None, sd)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown generator {name!r}")


def load_input(cfg: RunConfig) -> ParsedGraph:
    if (cfg.input is None) == (cfg.gen is None):
        raise UsageError("exactly one of --input or --gen is required")
    if cfg.input is not None:
        return read_graph(cfg.input)
    return generate(cfg.gen, cfg.seed)


def _bipartition(parsed: ParsedGraph) -> BipartitionInfo:
    if parsed.bipartition is not None:
        return parsed.bipartition
    sides = parsed.graph.two_coloring()
    if sides is None:
        raise GraphError("graph is not bipartite")
    return BipartitionInfo.from_two_coloring(sides)


def _budget(cfg: RunConfig) -> float | None:
    return None if cfg.budget_ms is None else cfg.budget_ms / 1000


def _text(doc: dict, indent: int = 0) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(" " * indent + f"{key}:")
            lines.append(_text(value, indent + 2))
        else:
            lines.append(" " * indent + f"{key}: {value}")
    return "\n".join(lines)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        flat = {k: v for k, v in doc.items() if not isinstance(v, (dict, list))}
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
        writer.writeheader()
        writer.writerow(flat)
        return buf.getvalue()
    return _text(doc) + "\n"


def cmd_approx(cfg: RunConfig) -> tuple[int, dict]:
    parsed = load_input(cfg)
    report = approx_sum_regular(parsed.graph)
    doc = report.document()
    doc["achieved_ratio_vs_lower"] = frac_str(report.achieved_ratio)
    return EXIT_OK, doc


def cmd_exact(cfg: RunConfig) -> tuple[int, dict]:
    parsed = load_input(cfg)
    result = exact_sum(parsed.graph, time_budget=_budget(cfg))
    return (EXIT_OK if result.optimal else EXIT_BUDGET), result.document()


def cmd_split(cfg: RunConfig) -> tuple[int, dict]:
    parsed = load_input(cfg)
    if parsed.split is None:
        raise GraphError("split input must declare a split_partition (C, I)")
    return EXIT_OK, split_color(parsed.split, cfg.condition).document()


def cmd_useq(cfg: RunConfig) -> tuple[int, dict]:
    parsed = load_input(cfg)
    bp = _bipartition(parsed)
    c = u_sequential_color(parsed.graph, bp, cfg.side)
    side = bp.side(cfg.side)
    return EXIT_OK, {
        "side": cfg.side,
        "sum": c.sum,
        "formula_sum": sequential_sum(parsed.graph, side),
        "sequential": is_sequential(parsed.graph, c, side),
        "sequential_vertices": side,
        "coloring": c.document(),
    }


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    parsed = load_input(cfg)
    if cfg.coloring is None:
        raise UsageError("--coloring is required")
    doc = json.loads(Path(cfg.coloring).read_text())
    colors = doc["colors"] if isinstance(doc, dict) else doc
    report = verify_coloring(parsed.graph, EdgeColoring(tuple(colors)))
    return EXIT_OK, report.document()


def cmd_gen(cfg: RunConfig) -> tuple[int, str | dict]:
    parsed = load_input(cfg)
    if cfg.format == "json":
        return EXIT_OK, graph_document(parsed.graph, parsed.bipartition, parsed.split)
    return EXIT_OK, to_dimacs(parsed.graph, comment=cfg.gen or cfg.input)


# ---------------------------------------------------------------- benchmark


def corpus(name: str, instances: int, seed: int) -> list[tuple[str, str, int]]:
    """Rows as ``(family, generator spec, seed)`` in a fixed order."""
    rows: list[tuple[str, str, int]] = []
    if name in ("cubic", "all"):
        for n in (4, 6, 8, 10):
            rows += [("cubic", f"random-regular:{n},3", seed + k) for k in range(instances)]
    if name in ("complete", "all"):
        rows += [("complete", f"complete:{n}", seed) for n in range(2, 8)]
    if name in ("split", "all"):
        for cond in ("thm10", "thm11"):
            for c in range(1, 5):
                for k in range(instances):
                    rows.append((f"split-{cond}", f"split:{c},{1 + (k % 4)},{cond}", seed + k))
    if not rows:
        raise UsageError(f"unknown corpus {name!r}")
    return rows


def _check(name: str, ok: bool) -> str:
    return f"{name}={'pass' if ok else 'fail'}"


def bench_row(family: str, spec: str, seed: int, budget: float | None) -> dict:
    parsed = generate(spec, seed)
    g = parsed.graph
    row = dict.fromkeys(BENCH_COLUMNS, "")
    row.update(family=family, n=g.n, m=g.m)
    try:
        exact = exact_sum(g, time_budget=budget)
        exact_val = exact.sum if exact.optimal else None
    except EdgeLimitExceeded:
        exact_val = None
    checks = []
    if family in ("cubic", "complete"):
        rep = approx_sum_regular(g)
        row.update(
            r_or_delta=rep.r,
            lower_bound=frac_str(rep.lower_bound),
            achieved_sum=rep.achieved_sum,
            formula_upper=frac_str(rep.formula_upper),
        )
        checks.append(_check("lower<=achieved", rep.lower_bound <= rep.achieved_sum))
        checks.append(_check("achieved<=upper", rep.achieved_sum <= rep.formula_upper))
        if exact_val:
            ratio = Fraction(rep.achieved_sum, exact_val)
            row["ratio"] = frac_str(ratio)
            checks.append(_check("ratio<=bound", ratio <= ratio_bound(rep.r)))
        if family == "complete" and exact_val is not None:
            checks.append(_check("exact==kn_formula", exact_val == kn_exact_sum(g.n)))
    else:
        rep = split_color(parsed.split, family.split("-", 1)[1])
        row.update(
            r_or_delta=g.max_degree,
            lower_bound=general_lower_bound(g),
            achieved_sum=rep.coloring.sum,
            formula_upper=rep.bound,
        )
        checks.append(_check("proper", verify_coloring(g, rep.coloring).proper))
        checks.append(_check("achieved==bound", rep.coloring.sum == rep.bound))
        if exact_val is not None:
            row["ratio"] = frac_str(Fraction(rep.bound, exact_val)) if exact_val else "1/1"
            checks.append(_check("exact<=bound", exact_val <= rep.bound))
    row["exact_sum"] = "" if exact_val is None else exact_val
    row["checks"] = ";".join(checks)
    return row


def _bench_row_star(args):
    return bench_row(*args)


def cmd_bench(cfg: RunConfig) -> tuple[int, str]:
    budget = _budget(cfg) if cfg.budget_ms is not None else 30.0
    tasks = [(f, s, sd, budget) for f, s, sd in corpus(cfg.corpus, cfg.instances, cfg.seed)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            rows = list(pool.map(_bench_row_star, tasks))
    else:
        rows = [bench_row(*t) for t in tasks]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return EXIT_OK, buf.getvalue()


COMMANDS = {
    "approx": cmd_approx,
    "exact": cmd_exact,
    "split": cmd_split,
    "useq": cmd_useq,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgesum", description="Minimum-sum edge colorings.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", "--graph", dest="input", help="graph file (.json or DIMACS)")
    parser.add_argument("--gen", help="generator spec, e.g. complete:5 or random-regular:10,3")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=["text", "json", "csv"], default="text")
    parser.add_argument("--budget-ms", type=int, default=None)
    parser.add_argument("--condition", choices=["thm10", "thm11"], default=None)
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--side", choices=[U, W], default=U, help="sequential side for useq")
    parser.add_argument("--coloring", help="coloring JSON document for verify")
    parser.add_argument("--corpus", default="all", help="bench corpus: cubic, complete, split, all")
    parser.add_argument("--instances", type=int, default=5, help="bench instances per size")
    parser.add_argument("--jobs", type=int, default=1, help="bench worker processes")
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        code, payload = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        return EXIT_PRECONDITION, f"error: {exc}\n"
    except (GraphError, ParseError, ColoringError, EdgeLimitExceeded, gen.GenerationError) as exc:
        return EXIT_PRECONDITION, f"error: {exc}\n"
    except FileNotFoundError as exc:
        return EXIT_PRECONDITION, f"error: {exc}\n"
    except Exception as exc:  # noqa: BLE001
        return EXIT_INTERNAL, f"internal error: {type(exc).__name__}: {exc}\n"
    text = payload if isinstance(payload, str) else render(payload, cfg.format)
    if cfg.output:
        Path(cfg.output).write_text(text)
        return code, ""
    return code, text


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_BUDGET) else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
