"""Command-line front end: ``python3 -m oneplanar <command> ...``.

Exit codes: 0 a verdict was produced, 2 invalid input, 3 budget exceeded or
inconclusive. ``--machine`` appends a ``key=value`` block to the report.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field

from . import bounds
from .drawing import DrawingClass, DrawingError, drawing_class, max_overlap
from .fileio import FormatError, read_drawing, to_dot, write_drawing
from .generators import GENERATORS, GeneratorError, join_excludes_c0_by_edges
from .graphs import Graph, GraphError, parse_graph_name, read_graph, write_graph
from .joins import JoinError, JoinOutcome, check_small_factor_conditions, classify_join_both_ge3
from .rewrite import clean_adjacent_crossings, normalize
from .search import BudgetExceeded, SearchBudget, classify_graph, witness_min_crossings

OK, INVALID, INCONCLUSIVE = 0, 2, 3


@dataclass
class CommandResult:
    exit_code: int
    report: str
    machine: dict[str, object] = field(default_factory=dict)
    show_machine: bool = False

    def render(self) -> str:
        text = self.report.rstrip("\n") + "\n"
        if self.show_machine and self.machine:
            text += "".join(f"{k}={_fmt(v)}\n" for k, v in self.machine.items())
        return text


def _fmt(v: object) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return "none" if v is None else str(v)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D401 - argparse hook
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class InputError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    """A graph file path, or a catalog expression such as ``K4,3`` or ``C3uP1``."""
    try:
        if os.path.exists(arg):
            with open(arg, encoding="utf-8") as fh:
                return read_graph(fh.read())
        return parse_graph_name(arg)
    except (OSError, GraphError) as exc:
        raise InputError(f"graph {arg!r}: {exc}") from exc


def load_drawing(path: str, raw: bool = False):
    try:
        with open(path, encoding="utf-8") as fh:
            return read_drawing(fh.read(), raw=raw)
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _budget(args) -> SearchBudget:
    cap = DrawingClass[args.class_cap] if getattr(args, "class_cap", None) else None
    return SearchBudget(
        max_crossings=getattr(args, "max_crossings", None),
        class_cap=cap,
        node_limit=args.node_limit,
        jobs=args.jobs,
    )


def _bound_block(g: Graph) -> dict[str, object]:
    out: dict[str, object] = {
        "crossings_lower_bound": bounds.crossings_lower_bound(g.n, g.m),
        "crossings_upper_bound": bounds.crossings_upper_bound(g.n, g.m),
        "c0_max_crossings": bounds.bound_c0_max_crossings(g.n),
    }
    if g.n >= 2:
        out["c1_max_crossings"] = bounds.bound_c1_max_crossings(g.n)
    return out


# -- commands ---------------------------------------------------------------


def cmd_validate(args) -> CommandResult:
    try:
        d = load_drawing(args.drawing, raw=args.raw)
    except DrawingError as exc:
        return CommandResult(INVALID, f"invalid: {exc}", {"valid": False})
    adjacent = sum(1 for a, b in d.spec.pairs if set(a) & set(b))
    if adjacent:
        report = f"valid (raw), crossings={d.crossings}, adjacent-crossings={adjacent}"
        return CommandResult(OK, report, {"valid": True, "crossings": d.crossings, "adjacent": adjacent})
    cls = drawing_class(d)
    report = f"valid, class={cls.label}, crossings={d.crossings}"
    return CommandResult(OK, report, {"valid": True, "class": cls.label, "crossings": d.crossings})


def cmd_classify_drawing(args) -> CommandResult:
    d = load_drawing(args.drawing)
    cls = drawing_class(d)
    overlap = max_overlap(d.spec)
    report = f"{cls.label} (max overlap {overlap}, crossings={d.crossings})"
    return CommandResult(OK, report, {"class": cls.label, "overlap": overlap, "crossings": d.crossings})


def cmd_normalize(args) -> CommandResult:
    d = load_drawing(args.drawing, raw=args.raw)
    before = d.crossings
    d = clean_adjacent_crossings(d)
    uncrossed = before - d.crossings
    d, steps = normalize(d)
    text = write_drawing(d)
    lines = [f"normalized: {before} -> {d.crossings} crossings ({uncrossed} adjacent, {steps} overlap-3 steps)"]
    lines.append(f"class={drawing_class(d).label}")
    if args.out:
        _write(args.out, text)
        lines.append(f"witness={args.out}")
    else:
        lines.append(text.rstrip("\n"))
    meta = {"crossings_before": before, "crossings": d.crossings, "steps": steps, "class": drawing_class(d).label}
    return CommandResult(OK, "\n".join(lines), meta)


def cmd_search(args) -> CommandResult:
    g = load_graph(args.graph)
    budget = _budget(args)
    meta: dict[str, object] = {"n": g.n, "m": g.m, "max_crossings": budget.ceiling(g)}
    meta.update(_bound_block(g))
    try:
        witness = witness_min_crossings(g, budget)
        if witness is None:
            report = f"min=none (no drawing with at most {budget.ceiling(g)} crossings)"
            meta.update(min=None)
            return CommandResult(OK, report, meta)
        cls = classify_graph(g, SearchBudget(node_limit=budget.node_limit, jobs=budget.jobs))
    except BudgetExceeded as exc:
        meta.update(status="budget-exceeded", partial=exc.partial, nodes=exc.nodes)
        return CommandResult(INCONCLUSIVE, f"inconclusive: {exc}", meta)
    lines = [f"min={witness.crossings}, class={cls.level.label}"]
    meta.update({"min": witness.crossings, "class": cls.level.label, "witness_class": drawing_class(witness).label})
    if args.witness:
        _write(args.witness, write_drawing(witness))
        lines.append(f"witness={args.witness}")
        meta["witness"] = args.witness
    return CommandResult(OK, "\n".join(lines), meta)


def cmd_classify_graph(args) -> CommandResult:
    g = load_graph(args.graph)
    meta: dict[str, object] = {"n": g.n, "m": g.m}
    meta.update(_bound_block(g))
    try:
        result = classify_graph(g, _budget(args))
    except BudgetExceeded as exc:
        meta.update(status="budget-exceeded", partial=exc.partial, nodes=exc.nodes)
        return CommandResult(INCONCLUSIVE, f"inconclusive: {exc}", meta)
    meta.update({"class": result.level.label, "crossings": result.crossings, "nodes": result.nodes})
    if result.witness is None:
        return CommandResult(OK, f"{result.level.label}", meta)
    lines = [f"{result.level.label} (witness: {drawing_class(result.witness).label}, crossings={result.crossings})"]
    if args.witness:
        _write(args.witness, write_drawing(result.witness))
        lines.append(f"witness={args.witness}")
        meta["witness"] = args.witness
    return CommandResult(OK, "\n".join(lines), meta)


def cmd_classify_join(args) -> CommandResult:
    g, h = load_graph(args.g), load_graph(args.h)
    try:
        verdict = classify_join_both_ge3(g, h)
    except JoinError as exc:
        raise InputError(f"{exc}; use check-conditions for a factor with at most two vertices") from exc
    return CommandResult(OK, str(verdict), {"outcome": verdict.outcome.value, "rule": verdict.rule})


def cmd_check_conditions(args) -> CommandResult:
    g, h = load_graph(args.g), load_graph(args.h)
    try:
        verdict = check_small_factor_conditions(g, h, target=args.target)
    except JoinError as exc:
        raise InputError(str(exc)) from exc
    lines = [str(verdict)]
    for c in verdict.checks:
        mark = "ok" if c.holds else "FAIL"
        tight = " (tight)" if c.tight else ""
        lines.append(f"  {c.condition}: {c.lhs} vs {c.rhs} {mark}{tight}")
    meta = {"outcome": verdict.outcome.value, "condition": verdict.condition}
    code = INCONCLUSIVE if verdict.outcome is JoinOutcome.INCONCLUSIVE else OK
    return CommandResult(code, "\n".join(lines), meta)


def cmd_generate(args) -> CommandResult:
    try:
        inst = GENERATORS[args.family](args.param)
    except GeneratorError as exc:
        raise InputError(str(exc)) from exc
    claim = inst.claim
    lines = [
        f"{args.family}({args.param}): |V|={inst.graph.n}, |E|={inst.graph.m}",
        f"witness: {drawing_class(inst.witness).label} of G+{claim.factor}, crossings={inst.witness.crossings}",
        f"bound {claim.bound}: {claim.bound_lhs} vs {claim.bound_rhs}{' (tight)' if claim.tight else ''}",
    ]
    meta = {
        "family": args.family,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "witness_class": drawing_class(inst.witness).label,
        "crossings": inst.witness.crossings,
        "tight": claim.tight,
    }
    if claim.drawing_class is DrawingClass.C1:
        excluded = join_excludes_c0_by_edges(inst)
        lines.append(f"join has too many edges for C0: {excluded}")
        meta["c0_excluded_by_edges"] = excluded
    if args.out_graph:
        _write(args.out_graph, write_graph(inst.graph))
        lines.append(f"graph={args.out_graph}")
    if args.out_drawing:
        _write(args.out_drawing, write_drawing(inst.witness))
        lines.append(f"witness={args.out_drawing}")
        meta["witness"] = args.out_drawing
    else:
        lines.append(write_drawing(inst.witness).rstrip("\n"))
    return CommandResult(OK, "\n".join(lines), meta)


def cmd_bounds(args) -> CommandResult:
    n = args.n
    meta: dict[str, object] = {"n": n, "c0_max_crossings": bounds.bound_c0_max_crossings(n)}
    try:
        meta["c1_max_crossings"] = bounds.bound_c1_max_crossings(n)
        for cls in (DrawingClass.C0, DrawingClass.C1, DrawingClass.C2):
            meta[f"{cls.name.lower()}_max_edges"] = bounds.bound_max_edges(n, cls)
    except bounds.BoundError as exc:
        raise InputError(str(exc)) from exc
    if args.m is not None:
        meta["crossings_lower_bound"] = bounds.crossings_lower_bound(n, args.m)
        meta["crossings_upper_bound"] = bounds.crossings_upper_bound(n, args.m)
        for cls in (DrawingClass.C0, DrawingClass.C1):
            meta[f"within_{cls.name.lower()}_edges"] = bounds.within_edge_bound(n, args.m, cls)
    report = "\n".join(f"{k}: {_fmt(v)}" for k, v in meta.items())
    return CommandResult(OK, report, meta)


def cmd_export_dot(args) -> CommandResult:
    d = load_drawing(args.drawing, raw=args.raw)
    text = to_dot(d)
    if args.out:
        _write(args.out, text)
        return CommandResult(OK, f"dot={args.out}", {"dot": args.out})
    return CommandResult(OK, text)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--machine", action="store_true", help="append a key=value summary")
    search_opts = _Parser(add_help=False)
    search_opts.add_argument("--node-limit", type=int, default=None, help="cap on planarity tests")
    search_opts.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = _Parser(prog="oneplanar", description="1-planar drawings, classes and joins")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, parents=(common,)):
        sp = sub.add_parser(name, help=help_text, parents=list(parents))
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, "check a drawing file")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--raw", action="store_true", help="admit crossings of adjacent edges")

    sp = add("classify-drawing", cmd_classify_drawing, "class of a drawing")
    sp.add_argument("--drawing", required=True)

    sp = add("normalize", cmd_normalize, "remove adjacent and overlap-3 crossings")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--raw", action="store_true")
    sp.add_argument("--out")

    sp = add("search", cmd_search, "minimum 1-planar crossing count", (common, search_opts))
    sp.add_argument("--graph", required=True, help="graph file or catalog expression")
    sp.add_argument("--max-crossings", type=int, default=None)
    sp.add_argument("--class-cap", choices=["C0", "C1", "C2"], default=None)
    sp.add_argument("--witness", help="write the witness drawing here")

    sp = add("classify-graph", cmd_classify_graph, "C0/C1/C2/NotOnePlanar by search", (common, search_opts))
    sp.add_argument("--graph", required=True)
    sp.add_argument("--witness")

    sp = add("classify-join", cmd_classify_join, "class of G+H, both factors with >= 3 vertices")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)

    sp = add("check-conditions", cmd_check_conditions, "necessary conditions for G+P1, G+2P1, G+P2")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True, help="P1, 2P1 or P2")
    sp.add_argument("--target", choices=["C0", "C1"], default=None)

    sp = add("generate", cmd_generate, "build a family instance with its witness")
    sp.add_argument("family", choices=sorted(GENERATORS))
    sp.add_argument("--param", type=int, required=True, help="k, or l for 4l-cycle")
    sp.add_argument("--out-graph")
    sp.add_argument("--out-drawing")

    sp = add("bounds", cmd_bounds, "crossing and edge bounds")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, default=None)

    sp = add("export-dot", cmd_export_dot, "planarization as DOT")
    sp.add_argument("--drawing", required=True)
    sp.add_argument("--raw", action="store_true")
    sp.add_argument("--out")
    return p


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandResult(INVALID, str(exc))
    try:
        result = args.fn(args)
    except (InputError, FormatError, DrawingError, GraphError, ValueError) as exc:
        result = CommandResult(INVALID, f"error: {exc}", {"status": "invalid-input"})
    result.show_machine = args.machine
    return result


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if result.exit_code != INVALID else sys.stderr
    stream.write(result.render())
    return result.exit_code
