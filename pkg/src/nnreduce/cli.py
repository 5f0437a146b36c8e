"""Command line: solve, verify, relevant, generate, render, reduce-sat.

Exit codes: 0 success, 1 negative verdict, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .equivalence import is_reduced_training_set
from .exact import SearchBudget
from .generators import KINDS, generate
from .model import InstanceError, LabelledPointSet, load_instance
from .relevant import relevant_points_by_definition, relevant_points_by_walls
from .solve import read_subset, solve, write_subset

OK, NEGATIVE, INPUT_ERROR, BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path) -> LabelledPointSet:
    try:
        return load_instance(path)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except (InstanceError, ValueError, TypeError, KeyError) as e:
        raise InputError(f"{path}: {e}") from None


def _load_subset(path, n: int):
    try:
        sub = read_subset(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None
    if any(k >= n for k in sub):
        raise InputError(f"{path}: index out of range for {n} points")
    return sub


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_solve(args) -> int:
    P = _load(args.instance)
    budget = SearchBudget(max_size=args.max_size, node_limit=args.budget_nodes,
                          time_limit=args.budget_seconds)
    rep = solve(P, exact=args.exact, budget=budget)
    print(rep.text(P, explain=args.explain), file=sys.stderr if args.output in (None, "-") else sys.stdout)
    _emit(write_subset(rep.subset, f"method {rep.method}, size {rep.size}"), args.output)
    return OK if rep.optimal else BUDGET


def cmd_verify(args) -> int:
    P = _load(args.instance)
    sub = _load_subset(args.subset, P.n)
    if not sub:
        raise InputError("empty subset")
    v = is_reduced_training_set(P, sub)
    print(v.describe())
    return OK if v.equivalent else NEGATIVE


def cmd_relevant(args) -> int:
    P = _load(args.instance)
    reports = []
    if args.method in ("walls", "both"):
        reports.append(relevant_points_by_walls(P))
    if args.method in ("definition", "both"):
        reports.append(relevant_points_by_definition(P))
    for r in reports:
        print(f"{r.method}: {' '.join(map(str, r.indices))}")
    if len(reports) == 2 and reports[0].indices != reports[1].indices:
        print("the two methods disagree", file=sys.stderr)
        return NEGATIVE
    return OK


def cmd_generate(args) -> int:
    try:
        P = generate(args.kind, n=args.n, m=args.m, seed=args.seed, rows=args.rows, cols=args.cols)
    except ValueError as e:
        raise InputError(str(e)) from None
    _emit(P.to_json() if args.json else P.to_text(), args.output)
    return OK


def cmd_render(args) -> int:
    from .svg import render_svg

    P = _load(args.instance)
    sub = _load_subset(args.subset, P.n) if args.subset else None
    _emit(render_svg(P, sub, walls=not args.no_walls, title=Path(args.instance).name), args.svg)
    return OK


def cmd_reduce_sat(args) -> int:
    from .reduction.cells import GadgetError
    from .reduction.compile import compile_instance
    from .reduction.sat import FormulaError, Max2SatInstance

    try:
        inst = Max2SatInstance.from_text(Path(args.formula).read_text())
    except OSError as e:
        raise InputError(f"cannot read {args.formula}: {e.strerror}") from None
    except FormulaError as e:
        raise InputError(f"{args.formula}: {e}") from None
    try:
        layout = compile_instance(inst, verify=not args.no_verify)
    except FormulaError as e:
        print(f"rejected: {e}", file=sys.stderr)
        return NEGATIVE
    except GadgetError as e:  # pragma: no cover - gadgets are verified in tests
        print(f"gadget verification failed: {e}", file=sys.stderr)
        return NEGATIVE
    _emit(layout.point_set.to_text(), args.output)
    man = layout.manifest()
    if args.manifest:
        Path(args.manifest).write_text(json.dumps(man, indent=2) + "\n")
    print(f"n = {man['n']}, n1 = {man['n1']}, n2 = {man['n2']}, "
          f"target size {man['target_size']} (k = {inst.k}: {man['target_for_k']})", file=sys.stderr)
    if args.svg:
        from .svg import render_svg
        Path(args.svg).write_text(render_svg(layout.point_set, walls=False, title="compiled formula"))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nnreduce", description="Minimum lossless reductions of "
                                "nearest-neighbour training sets.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="minimum reduced training set")
    s.add_argument("instance")
    s.add_argument("-o", "--output", help="subset file (default stdout)")
    s.add_argument("--exact", action="store_true", help="always run the exhaustive search")
    s.add_argument("--explain", action="store_true")
    s.add_argument("--budget-nodes", type=int, default=2_000_000)
    s.add_argument("--budget-seconds", type=float, default=600.0)
    s.add_argument("--max-size", type=int)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check that a subset induces the same classification")
    s.add_argument("instance")
    s.add_argument("subset")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("relevant", help="relevant points")
    s.add_argument("instance")
    s.add_argument("--method", choices=("walls", "definition", "both"), default="walls")
    s.set_defaults(func=cmd_relevant)

    s = sub.add_parser("generate", help="seeded random instances")
    s.add_argument("kind", choices=KINDS)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--rows", type=int, default=3)
    s.add_argument("--cols", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("render", help="SVG picture of an instance")
    s.add_argument("instance")
    s.add_argument("--subset")
    s.add_argument("--svg", required=True, help="output file ('-' for stdout)")
    s.add_argument("--no-walls", action="store_true", help="draw only the decision boundary")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("reduce-sat", help="compile a V-cycle max2SAT formula to a point set")
    s.add_argument("formula")
    s.add_argument("-o", "--output", help="instance file (default stdout)")
    s.add_argument("--manifest")
    s.add_argument("--svg")
    s.add_argument("--no-verify", action="store_true", help="skip build-time gadget checks")
    s.set_defaults(func=cmd_reduce_sat)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    for flag in ("budget_nodes", "n", "m", "rows", "cols", "max_size"):
        v = getattr(args, flag, None)
        if v is not None and v < 1:
            print(f"error: --{flag.replace('_', '-')} must be positive", file=sys.stderr)
            return INPUT_ERROR
    if getattr(args, "budget_seconds", 1) <= 0:
        print("error: --budget-seconds must be positive", file=sys.stderr)
        return INPUT_ERROR
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
