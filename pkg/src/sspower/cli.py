"""Command line front end.

Exit codes: 0 success, 2 usage error, 3 invalid input, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import errors
from .estimators import EstimatorConfig, estimate
from .exact import exact_index
from .experiments import TrialBattery, run_battery
from .game import distinct_weight_count
from .instances import BUILTINS, format_compact, load_instance
from .planner import BoundKind, plan
from .reports import render_text, report_csv, report_json, result_document

EXIT_USAGE, EXIT_VALIDATION, EXIT_RESOURCE = 2, 3, 4
BOUNDS = ("per-player", "uniform", "tv")


def _int_list(text: str) -> list[int]:
    try:
        return [int(float(tok)) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(render_text(doc))


def cmd_exact(args) -> int:
    inst = load_instance(args.instance)
    game = inst.game()
    started = time.perf_counter()
    result = exact_index(game, args.method)
    seconds = time.perf_counter() - started if args.timing else None
    _emit(result_document(inst, game, args.method, result.values, seconds=seconds), args.format)
    return 0


def _plan_for(args, n: int, n_distinct: int):
    if args.epsilon is None or args.delta is None or args.bound is None:
        raise errors.InvalidTolerance("--epsilon, --delta and --bound are required when --samples is not given")
    kind = BoundKind.lookup(args.algorithm, args.bound)
    return plan(kind, args.epsilon, args.delta, n=n, n_distinct=n_distinct,
                player=args.player, n_star=getattr(args, "n_star", None))


def cmd_estimate(args) -> int:
    inst = load_instance(args.instance)
    game = inst.game()
    sample_plan = None
    samples = args.samples
    if samples is None:
        sample_plan = _plan_for(args, game.n, distinct_weight_count(game))
        samples = sample_plan.samples
    cfg = EstimatorConfig(samples, args.seed, args.batches)
    started = time.perf_counter()
    est = estimate(game, args.algorithm, cfg, backend=args.backend)
    seconds = time.perf_counter() - started if args.timing else None
    doc = result_document(inst, game, args.algorithm, est.values, samples=samples,
                          seed=args.seed, batches=args.batches, plan=sample_plan, seconds=seconds)
    _emit(doc, args.format)
    return 0


def cmd_plan(args) -> int:
    p = _plan_for(args, args.n, args.n2 if args.n2 is not None else args.n)
    if args.format == "json":
        print(json.dumps(p.as_dict(), indent=2))
    else:
        print(f"M = {p.samples}")
        print(f"# {p.formula_note}; exact value {p.exact_value!r}")
    return 0


def cmd_experiment(args) -> int:
    inst = load_instance(args.instance)
    game = inst.game()
    algorithms = tuple(a.strip().lower() for a in args.algorithm.split(",") if a.strip())
    battery = TrialBattery(game, algorithms, tuple(args.samples_list), args.trials, args.seed, args.batches)
    report = run_battery(battery, exact_index(game, "dp"), backend=args.backend)
    out = Path(args.out)
    out.write_text(report_csv(report), encoding="utf-8")
    json_path = Path(args.json_out) if args.json_out else out.with_suffix(".json")
    json_path.write_text(report_json(report) + "\n", encoding="utf-8")
    print(f"wrote {out} and {json_path}")
    return 0


def cmd_instances(args) -> int:
    for name, inst in BUILTINS.items():
        game = inst.game()
        print(f"{name}\tn={game.n}\tdistinct={distinct_weight_count(game)}\t{format_compact(inst)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sspower", description="Shapley-Shubik power index of weighted majority games.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--timing", action="store_true", help="include wall-clock seconds in the output")

    def add_tolerance(p):
        p.add_argument("--epsilon", type=float)
        p.add_argument("--delta", type=float)
        p.add_argument("--bound", choices=BOUNDS)
        p.add_argument("--player", type=int, help="1-based canonical player (heaviest = 1) for a2 per-player")
        p.add_argument("--n-star", type=int, dest="n_star",
                       help="override the distinct-weight count in the a2 tv bound")

    p = sub.add_parser("exact", help="exact index as fractions")
    p.add_argument("instance")
    p.add_argument("--method", choices=("dp", "enum"), default="dp")
    add_common(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("estimate", help="Monte Carlo estimate")
    p.add_argument("instance")
    p.add_argument("--algorithm", choices=("a1", "a2"), required=True)
    p.add_argument("--samples", type=int)
    add_tolerance(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--batches", type=int, default=1)
    p.add_argument("--backend", choices=("numba", "numpy"))
    add_common(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("plan", help="required number of samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n2", type=int, help="number of distinct weights (a2 tv bound)")
    p.add_argument("--algorithm", choices=("a1", "a2"), required=True)
    add_tolerance(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("experiment", help="repeated-trial error battery")
    p.add_argument("instance")
    p.add_argument("--algorithm", default="a1,a2")
    p.add_argument("--samples-list", type=_int_list, required=True, dest="samples_list")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--batches", type=int, default=1)
    p.add_argument("--backend", choices=("numba", "numpy"))
    p.add_argument("--out", required=True, help="CSV path; JSON goes next to it")
    p.add_argument("--json-out", dest="json_out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("instances", help="list bundled instances")
    p.set_defaults(func=cmd_instances)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except errors.ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (errors.ValidationError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
