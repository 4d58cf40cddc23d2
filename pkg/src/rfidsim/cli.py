"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 input parse/validation error,
3 refused size guard, 4 golden example mismatch.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .algorithms import AlgorithmId, format_result, run
from .backend import available_backends, default_backend_name
from .experiment import metrics_csv_lines, render_plot_script, run_plan_to_csv
from .fixtures import FIXTURES, golden_checks
from .netfile import NetworkFormatError, load_network, serialize_network
from .network import RfidNetwork
from .oracles import (
    GuardRefusal,
    compute_metrics,
    greedy_redundant_lower_bound,
    oa_characterization,
    optimal_redundant_count,
)
from .scenario import ScenarioConfig, generate, plan

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_REFUSED = 3
EXIT_MISMATCH = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; this CLI reserves 2 for
    # input validation, so usage failures are rerouted to status 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _load_net(spec: str) -> RfidNetwork:
    path = Path(spec)
    if path.exists():
        return load_network(path)
    key = spec.strip().lower()
    if key in FIXTURES:
        return FIXTURES[key]()
    raise NetworkFormatError(
        f"{spec!r} is neither a file nor a builtin network "
        f"({', '.join(sorted(FIXTURES))})"
    )


def _parse_order(text: str) -> tuple[int, ...]:
    try:
        ids = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad order {text!r}: expected comma-separated ids")
    # validated as a permutation inside run()
    return ids


def cmd_gen(args) -> int:
    config = ScenarioConfig(
        reader_count=args.nr,
        tag_count=args.nt,
        radius=args.rad,
        area_side=args.area,
        seed=args.seed,
    )
    text = serialize_network(generate(config))
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_run(args) -> int:
    net = _load_net(args.net)
    algorithm = AlgorithmId.parse(args.algo)
    if args.order is not None:
        order = _parse_order(args.order)
    elif args.order_seed is not None:
        rng = random.Random(args.order_seed)
        ids = list(range(net.reader_count))
        rng.shuffle(ids)
        order = tuple(ids)
    else:
        order = None
    result = run(algorithm, net, order, backend=args.backend)
    sys.stdout.write(format_result(result))
    return EXIT_OK


def cmd_metrics(args) -> int:
    net = _load_net(args.net)
    algorithm = AlgorithmId.parse(args.algo)
    report = compute_metrics(net, algorithm, backend=args.backend)
    if args.csv:
        for line in metrics_csv_lines([report]):
            print(line)
        return EXIT_OK
    only = args.pod or args.prd
    if args.pod or not only:
        print(f"pod={report.pod:.3f}")
    if args.prd or not only:
        print(f"prd={report.prd:.3f}")
    if not only:
        print(f"optimal={report.optimal}")
        print(f"orders={report.orders_evaluated}")
        print(f"optimal_orders={report.optimal_orders}")
        print(f"detected_orders={report.detected_orders}")
        print(f"violation_orders={report.violation_orders}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    net = _load_net(args.net)
    if args.greedy:
        print(f"greedy_lower_bound={greedy_redundant_lower_bound(net)}")
        return EXIT_OK
    print(f"optimal={optimal_redundant_count(net)}")
    ids = sorted(oa_characterization(net))
    print(f"characterization={','.join(map(str, ids)) if ids else '-'}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    the_plan = plan(args.setup, trials_per_point=args.trials, master_seed=args.seed)
    out = args.out or f"experiment_{the_plan.setup}.csv"
    rows = run_plan_to_csv(
        the_plan, out, timings=args.timings, backend=args.backend
    )
    print(f"wrote {rows} rows to {out}")
    if args.plot:
        script = render_plot_script(
            out, the_plan.setup, the_plan.param_name, Path(out).stem
        )
        gp = str(Path(out).with_suffix(".gp"))
        Path(gp).write_text(script, encoding="ascii")
        print(f"wrote plot script to {gp}")
    return EXIT_OK


def cmd_examples(args) -> int:
    failures = 0
    total = 0
    for name, ok, detail in golden_checks(backend=args.backend):
        total += 1
        if ok:
            print(f"ok {name}")
        else:
            failures += 1
            print(f"MISMATCH {name}: {detail}")
    if failures:
        print(f"examples: {failures} of {total} checks failed")
        return EXIT_MISMATCH
    print(f"examples: {total} checks passed")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="rfidsim",
        description="Deterministic redundant-RFID-reader detection simulator",
    )
    backends = available_backends()
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random network file")
    p.add_argument("--nr", type=int, required=True, help="number of readers")
    p.add_argument("--nt", type=int, required=True, help="number of tags")
    p.add_argument("--rad", type=float, required=True, help="detection radius")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--area", type=float, default=10000.0,
                   help="side of the square working area")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("run", help="run one detection scheme once")
    p.add_argument("--net", required=True,
                   help="network file or builtin name (ex0, ex1, ex2, ...)")
    p.add_argument("--algo", required=True,
                   help="naive|rre|leo|leo_rre|oa|drre")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--order", help="visiting order, e.g. 2,0,1")
    group.add_argument("--order-seed", type=int,
                       help="draw the order from this seed")
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("metrics",
                       help="exhaustive per-order statistics (all M! orders)")
    p.add_argument("--net", required=True)
    p.add_argument("--algo", required=True)
    p.add_argument("--pod", action="store_true", help="print only pod")
    p.add_argument("--prd", action="store_true", help="print only prd")
    p.add_argument("--csv", action="store_true", help="print as a CSV row")
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("oracle",
                       help="exact optimum and order-free characterization")
    p.add_argument("--net", required=True)
    p.add_argument("--greedy", action="store_true",
                   help="print the greedy lower bound instead (no size guard)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("experiment", help="run a stock parameter sweep")
    p.add_argument("--setup", required=True, help="I, II, III or IV")
    p.add_argument("--seed", type=int, required=True, help="master seed")
    p.add_argument("--trials", type=int, default=50,
                   help="trials per sweep point (default 50)")
    p.add_argument("--out", help="CSV path (default experiment_<setup>.csv)")
    p.add_argument("--plot", action="store_true",
                   help="also write a gnuplot script next to the CSV")
    p.add_argument("--timings", action="store_true",
                   help="append a runtime_ms column (breaks rerun byte-identity)")
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("examples", help="replay the frozen golden examples")
    p.add_argument("--backend", choices=backends, default=None)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("backends", help="show available kernel backends")
    p.set_defaults(func=cmd_backends)

    return parser


def cmd_backends(args) -> int:
    default = default_backend_name()
    for name in available_backends():
        marker = " (default)" if name == default else ""
        print(f"{name}{marker}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GuardRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (NetworkFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
