"""Command-line interface: ``hitwalk <subcommand> ...``.

Exit codes: 0 success, 1 usage or I/O error, 2 parse/invariant error,
3 unreachable target, 4 comparison mismatch, 5 simulation truncated.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict
from typing import Sequence

from . import formulas
from .families import (
    CompleteDaryTree, Cycle, FamilyParameterError, Grid, Hypercube, Path, Star, Tadpole,
    TreeFromParents, dary_depth, dary_parent, dary_size, generate,
)
from .graph import GraphError, read_graph, serialize_graph
from .montecarlo import (
    DEFAULT_MAX_STEPS, AllWalksTruncatedError, UnreachableTargetError, WalkConfig,
    simulate_hitting_time, simulate_return_time,
)
from .report import RunReport, graph_fingerprint, matrix_to_csv, render_number
from .solver import UNREACHABLE, Backend, all_pairs, hitting_times_to

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_UNREACHABLE = 3
EXIT_MISMATCH = 4
EXIT_TRUNCATED = 5

Z_FLAG = 4.0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_parents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"parents must be integers, got {text!r}") from None


FAMILY_ARGS = {
    "path": (("n",), lambda a: Path(a.n)),
    "cycle": (("n",), lambda a: Cycle(a.n)),
    "grid": (("d", "m"), lambda a: Grid(a.d, a.m)),
    "hypercube": (("d",), lambda a: Hypercube(a.d)),
    "star": (("leaves",), lambda a: Star(a.leaves)),
    "dary": (("d", "h"), lambda a: CompleteDaryTree(a.d, a.h)),
    "tadpole": (("k", "l"), lambda a: Tadpole(a.k, a.l)),
    "tree": (("parents",), lambda a: TreeFromParents(a.parents)),
}


def _add_params(p: argparse.ArgumentParser, names: Sequence[str]) -> None:
    for name in names:
        if name == "parents":
            p.add_argument("--parents", type=_parse_parents, required=True,
                           help="parent of each vertex, comma or space separated, -1 for the root "
                                "(vertex 0); write --parents=-1,0,... so the leading -1 is not read as a flag")
        else:
            p.add_argument(f"--{name}", type=int, required=True)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print the full JSON run report")


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _emit(report: RunReport, as_json: bool, text: str) -> None:
    sys.stdout.write(report.to_json() if as_json else text)


# --- generate -------------------------------------------------------------

def cmd_generate(args) -> int:
    spec = FAMILY_ARGS[args.family][1](args)
    text = serialize_graph(generate(spec))
    if args.output in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from exc
    return EXIT_OK


# --- solve ----------------------------------------------------------------

def cmd_solve(args) -> int:
    g = _load(args.graph)
    g.check_vertex(args.source)
    value = hitting_times_to(g, args.target, args.backend)[args.source]
    rendered = render_number(value, unreachable="unreachable")
    report = RunReport(
        method=args.backend,
        inputs={"graph": {"path": args.graph, **graph_fingerprint(g)},
                "source": args.source, "target": args.target},
        value=rendered,
    )
    _emit(report, args.json, rendered + "\n")
    return EXIT_UNREACHABLE if value is UNREACHABLE else EXIT_OK


# --- formula --------------------------------------------------------------

def _formula_value(args):
    """Return (inputs echo, value or list of (vertex, value))."""
    f = args.family
    if f == "symmetric":
        return {"e": args.e, "k": args.k}, formulas.symmetric_neighbor_ht(args.e, args.k)
    if f == "grid":
        return ({"d": args.d, "m": args.m, "source": "corner-neighbor", "target": "corner"},
                formulas.grid_corner_ht(args.d, args.m))
    if f == "hypercube":
        return {"d": args.d, "source": "neighbor", "target": "vertex"}, formulas.hypercube_neighbor_ht(args.d)
    if f == "tree":
        tree = generate(TreeFromParents(args.parents))
        return ({"parents": list(args.parents), "source": args.v, "target": args.u},
                formulas.tree_neighbor_ht(tree, args.v, args.u))
    if f == "tadpole-end":
        return ({"k": args.k, "l": args.l, "source": "end-neighbor", "target": "end"},
                formulas.tadpole_end_ht(args.k, args.l))
    if f == "tadpole":
        inputs = {"k": args.k, "l": args.l, "target": "end"}
        if args.w is not None:
            inputs["source"] = args.w
            return inputs, formulas.tadpole_ht_to_end(args.k, args.l, args.w)
        spec = Tadpole(args.k, args.l)
        return inputs, [(w, formulas.tadpole_ht_to_end(spec.k, spec.l, w)) for w in range(spec.k + spec.l)]
    if f == "dary":
        return ({"d": args.d, "h": args.h, "source": args.u, "target": args.v},
                formulas.dary_ht(args.d, args.h, args.u, args.v))
    if f == "dary-root":
        return ({"d": args.d, "h": args.h, "depth": args.l, "target": "root"},
                formulas.dary_to_root_ht(args.d, args.h, args.l))
    if f == "dary-leaf":
        return ({"d": args.d, "h": args.h, "levels-above-leaf": args.l, "target": "leaf"},
                formulas.dary_ancestor_to_leaf_ht(args.d, args.h, args.l))
    raise UsageError(f"unknown formula family {f}")


def cmd_formula(args) -> int:
    inputs, value = _formula_value(args)
    inputs = {"family": args.family, **inputs}
    if isinstance(value, list):
        rendered = [{"source": w, "value": render_number(x)} for w, x in value]
        text = "".join(f"{w} {render_number(x)}\n" for w, x in value)
    else:
        rendered = render_number(value)
        text = rendered + "\n"
    _emit(RunReport(method="formula", inputs=inputs, value=rendered), args.json, text)
    return EXIT_OK


# --- simulate -------------------------------------------------------------

def cmd_simulate(args) -> int:
    g = _load(args.graph)
    cfg = WalkConfig(seed=args.seed, trials=args.trials, max_steps=args.max_steps)
    inputs = {"graph": {"path": args.graph, **graph_fingerprint(g)}, "source": args.source,
              "seed": cfg.seed, "trials": cfg.trials, "max_steps": cfg.max_steps}
    if args.return_time:
        inputs["target"] = "return"
        est = simulate_return_time(g, args.source, cfg)
    else:
        if args.target is None:
            raise UsageError("simulate needs --target unless --return is given")
        inputs["target"] = args.target
        est = simulate_hitting_time(g, args.source, args.target, cfg)
    value = {
        "mean": render_number(est.mean),
        "std_error": render_number(est.std_error),
        "trials_completed": est.trials_completed,
        "truncated": est.truncated,
        "valid": est.valid,
    }
    text = (f"mean {value['mean']}\nstd_error {value['std_error']}\n"
            f"trials_completed {est.trials_completed}\ntruncated {est.truncated}\n")
    _emit(RunReport(method="montecarlo", inputs=inputs, value=value), args.json, text)
    return EXIT_OK if est.valid else EXIT_TRUNCATED


# --- compare --------------------------------------------------------------

def _compare_pairs(args, spec):
    """(source, target, closed-form value) triples checked for a family."""
    if isinstance(spec, Grid):
        return [(spec.m ** i, 0, formulas.grid_corner_ht(spec.d, spec.m)) for i in range(spec.d)]
    if isinstance(spec, Hypercube):
        return [(1 << b, 0, formulas.hypercube_neighbor_ht(spec.d)) for b in range(spec.d)]
    if isinstance(spec, Tadpole):
        return [(w, spec.end, formulas.tadpole_ht_to_end(spec.k, spec.l, w)) for w in range(spec.k + spec.l)]
    if isinstance(spec, CompleteDaryTree):
        d, h = spec.d, spec.h
        n = dary_size(d, h)
        if args.all_pairs:
            return [(u, v, formulas.dary_ht(d, h, u, v)) for u in range(n) for v in range(n)]
        pairs = [(u, 0, formulas.dary_to_root_ht(d, h, dary_depth(u, d))) for u in range(n)]
        leaf = n - 1
        ancestor, up = leaf, 0
        while True:
            pairs.append((ancestor, leaf, formulas.dary_ancestor_to_leaf_ht(d, h, up)))
            if ancestor == 0:
                break
            ancestor, up = dary_parent(ancestor, d), up + 1
        return pairs
    if isinstance(spec, TreeFromParents):
        tree = generate(spec)
        return [(v, u, formulas.tree_neighbor_ht(tree, v, u))
                for v in range(tree.n) for u in tree.adjacency[v]]
    raise UsageError(f"compare does not support {type(spec).__name__}")


def cmd_compare(args) -> int:
    spec = FAMILY_ARGS[args.family][1](args)
    g = generate(spec)
    pairs = _compare_pairs(args, spec)
    by_target = defaultdict(list)
    for s, t, _ in pairs:
        by_target[t].append(s)
    solved = {t: hitting_times_to(g, t, Backend.EXACT) for t in sorted(by_target)}
    cfg = WalkConfig(seed=args.seed, trials=args.trials) if args.trials else None

    rows = []
    mismatches = 0
    mc_flags = 0
    for s, t, formula in pairs:
        exact = solved[t][s]
        equal = exact == formula
        mismatches += not equal
        row = {"source": s, "target": t, "formula": render_number(formula),
               "exact": render_number(exact), "equal": equal}
        if cfg is not None:
            est = simulate_hitting_time(g, s, t, cfg)
            diff = abs(est.mean - float(exact))
            if est.std_error > 0:
                z = diff / est.std_error
            else:
                z = 0.0 if diff == 0 else float("inf")
            flagged = z > Z_FLAG or not est.valid
            mc_flags += flagged
            row.update(mc_mean=render_number(est.mean), mc_std_error=render_number(est.std_error),
                       mc_z=render_number(z), mc_flagged=flagged)
        rows.append(row)

    inputs = {"family": args.family,
              **{name: (list(getattr(args, name)) if name == "parents" else getattr(args, name))
                 for name in FAMILY_ARGS[args.family][0]},
              "all_pairs": bool(getattr(args, "all_pairs", False)),
              "seed": args.seed, "trials": args.trials}
    agreement = {"pairs": len(rows), "exact_mismatches": mismatches,
                 "mc_flagged": mc_flags if cfg is not None else None, "rows": rows}
    report = RunReport(method="compare", inputs=inputs, value=None, agreement=agreement)

    lines = []
    for r in rows:
        line = f"{r['source']} -> {r['target']}: formula {r['formula']} exact {r['exact']} " \
               f"{'ok' if r['equal'] else 'MISMATCH'}"
        if cfg is not None:
            line += f" mc {r['mc_mean']} z {r['mc_z']}{' FLAG' if r['mc_flagged'] else ''}"
        lines.append(line)
    verdict = "all agree" if mismatches == 0 else f"{mismatches} mismatches"
    lines.append(f"{len(rows)} pairs, {verdict}")
    _emit(report, args.json, "\n".join(lines) + "\n")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


# --- all-pairs ------------------------------------------------------------

def cmd_all_pairs(args) -> int:
    g = _load(args.graph)
    columns = all_pairs(g, args.backend)
    matrix = [[columns[j][i] for j in range(g.n)] for i in range(g.n)]
    if args.format == "csv":
        text = matrix_to_csv(matrix, g.n)
    else:
        report = RunReport(
            method=args.backend,
            inputs={"graph": {"path": args.graph, **graph_fingerprint(g)}},
            value=[[render_number(x) for x in row] for row in matrix],
            extra={"header": f"hitwalk all-pairs n={g.n}"},
        )
        text = report.to_json()
    sys.stdout.write(text)
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hitwalk", description="Exact and simulated random-walk hitting times.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="write a family graph in the text format")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name, (params, _) in FAMILY_ARGS.items():
        fp = fam.add_parser(name)
        _add_params(fp, params)
        fp.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", help="hitting time from the linear system")
    p.add_argument("graph")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--backend", choices=[b.value for b in Backend], default="exact")
    _add_output_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("formula", help="closed-form hitting time")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name, params in {
        "symmetric": ("e", "k"), "grid": ("d", "m"), "hypercube": ("d",),
        "tree": ("parents", "v", "u"), "tadpole-end": ("k", "l"), "tadpole": ("k", "l"),
        "dary": ("d", "h", "u", "v"), "dary-root": ("d", "h", "l"), "dary-leaf": ("d", "h", "l"),
    }.items():
        fp = fam.add_parser(name)
        _add_params(fp, params)
        if name == "tadpole":
            fp.add_argument("--w", type=int, help="source vertex (default: every vertex)")
        _add_output_flags(fp)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("simulate", help="Monte Carlo estimate")
    p.add_argument("graph")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int)
    p.add_argument("--return", dest="return_time", action="store_true",
                   help="estimate the first-return time to --source instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    _add_output_flags(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("compare", help="closed form vs exact solve (and optional Monte Carlo)")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name in ("grid", "hypercube", "tadpole", "dary", "tree"):
        fp = fam.add_parser(name)
        _add_params(fp, FAMILY_ARGS[name][0])
        if name == "dary":
            fp.add_argument("--all-pairs", action="store_true")
        fp.add_argument("--trials", type=int, default=0, help="Monte Carlo trials per pair (0 = off)")
        fp.add_argument("--seed", type=int, default=0)
        _add_output_flags(fp)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("all-pairs", help="full hitting-time matrix (row = source, column = target)")
    p.add_argument("graph")
    p.add_argument("--backend", choices=[b.value for b in Backend], default="exact")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_all_pairs)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hitwalk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnreachableTargetError as exc:
        print(f"hitwalk: unreachable: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except AllWalksTruncatedError as exc:
        print(f"hitwalk: {exc}", file=sys.stderr)
        return EXIT_TRUNCATED
    except (GraphError, FamilyParameterError, formulas.FormulaDomainError, ValueError) as exc:
        print(f"hitwalk: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
