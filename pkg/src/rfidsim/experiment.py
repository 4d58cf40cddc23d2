"""Experiment execution: run a plan's trials, emit CSV and a gnuplot script.

Rows are produced serially in (point, trial, algorithm) order, so a rerun of
the same plan with the same master seed is byte-identical. Wall-clock timings
are measured and kept on ResultRow but excluded from the CSV unless asked
for, precisely because they would break that byte identity.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .algorithms import AlgorithmId, run
from .oracles import verify_coverage
from .scenario import ExperimentPlan, generate_trial

__all__ = [
    "CSV_HEADER",
    "METRICS_CSV_HEADER",
    "ResultRow",
    "EXPERIMENT_ALGORITHMS",
    "iter_plan_rows",
    "rows_to_csv_lines",
    "run_plan_to_csv",
    "render_plot_script",
    "metrics_csv_lines",
]

EXPERIMENT_ALGORITHMS: tuple[AlgorithmId, ...] = tuple(AlgorithmId)

CSV_HEADER = (
    "setup,param_name,param_value,algorithm,trial,seed,"
    "detected,writes,coverage_violated,uncovered_count"
)

METRICS_CSV_HEADER = (
    "algorithm,readers,optimal,orders_evaluated,optimal_orders,"
    "detected_orders,violation_orders,pod,prd,per_order_detected"
)


@dataclass(frozen=True)
class ResultRow:
    setup: str
    param_name: str
    param_value: float | int
    algorithm: AlgorithmId
    trial: int
    seed: int
    detected: int
    writes: int
    coverage_violated: bool
    uncovered_count: int
    runtime_ms: float

    def csv_fields(self, timings: bool = False) -> list[str]:
        value = self.param_value
        value_text = str(value) if isinstance(value, int) else _real(value)
        fields = [
            self.setup,
            self.param_name,
            value_text,
            self.algorithm.token,
            str(self.trial),
            str(self.seed),
            str(self.detected),
            str(self.writes),
            "1" if self.coverage_violated else "0",
            str(self.uncovered_count),
        ]
        if timings:
            fields.append(f"{self.runtime_ms:.3f}")
        return fields


def _real(value: float) -> str:
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return text if text not in ("-0", "") else "0"


def iter_plan_rows(
    plan: ExperimentPlan,
    algorithms: Sequence[AlgorithmId] = EXPERIMENT_ALGORITHMS,
    *,
    backend=None,
) -> Iterator[ResultRow]:
    """Run every (point, trial, algorithm) of the plan, in that nesting."""
    for point_index in range(len(plan.sweep)):
        value = plan.param_value(point_index)
        for trial_index in range(plan.trials_per_point):
            config = plan.trial_config(point_index, trial_index)
            net, order = generate_trial(config)
            for algorithm in algorithms:
                start = time.perf_counter()
                result = run(algorithm, net, order, backend=backend)
                elapsed_ms = (time.perf_counter() - start) * 1e3
                verdict = verify_coverage(net, result.redundant)
                yield ResultRow(
                    setup=plan.setup,
                    param_name=plan.param_name,
                    param_value=value,
                    algorithm=algorithm,
                    trial=trial_index,
                    seed=config.seed,
                    detected=len(result.redundant),
                    writes=result.writes_total,
                    coverage_violated=not verdict.preserved,
                    uncovered_count=len(verdict.uncovered),
                    runtime_ms=elapsed_ms,
                )


def rows_to_csv_lines(
    rows: Iterable[ResultRow], timings: bool = False
) -> Iterator[str]:
    header = CSV_HEADER + ",runtime_ms" if timings else CSV_HEADER
    yield header
    for row in rows:
        yield ",".join(row.csv_fields(timings))


def run_plan_to_csv(
    plan: ExperimentPlan,
    path,
    *,
    algorithms: Sequence[AlgorithmId] = EXPERIMENT_ALGORITHMS,
    timings: bool = False,
    backend=None,
) -> int:
    """Run the plan and write its CSV; returns the number of data rows."""
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for line in rows_to_csv_lines(
            iter_plan_rows(plan, algorithms, backend=backend), timings
        ):
            fh.write(line + "\n")
            count += 1
    return count - 1


def metrics_csv_lines(reports) -> Iterator[str]:
    """CSV rendering of MetricsReport records, one row per report."""
    yield METRICS_CSV_HEADER
    for rep in reports:
        hist = ";".join(f"{size}:{count}" for size, count in rep.per_order_detected)
        yield ",".join(
            [
                rep.algorithm.token,
                str(rep.reader_count),
                str(rep.optimal),
                str(rep.orders_evaluated),
                str(rep.optimal_orders),
                str(rep.detected_orders),
                str(rep.violation_orders),
                f"{rep.pod:.6f}",
                f"{rep.prd:.6f}",
                hist,
            ]
        )


_PLOT_TITLES = {
    "detected": "mean detected redundant readers",
    "writes": "mean write operations",
}


def render_plot_script(
    csv_path: str, setup: str, param_name: str, output_prefix: str
) -> str:
    """Text of a gnuplot script plotting mean detected and mean writes per
    algorithm against the swept parameter. Pure text artifact; nothing here
    executes gnuplot."""
    lines = [
        "# gnuplot script generated alongside the experiment CSV",
        "set datafile separator ','",
        "set key outside right",
        "set term pngcairo size 900,600",
        f"set xlabel '{param_name}'",
    ]
    algs = [a.token for a in EXPERIMENT_ALGORITHMS]
    # CSV columns: 3 = param_value, 4 = algorithm, 7 = detected, 8 = writes
    for metric_col, metric in ((7, "detected"), (8, "writes")):
        lines.append(f"set output '{output_prefix}_{metric}.png'")
        lines.append(f"set ylabel '{_PLOT_TITLES[metric]}'")
        lines.append(f"set title 'setup {setup}: {_PLOT_TITLES[metric]}'")
        plots = []
        for alg in algs:
            filt = (
                f"\"< awk -F, 'NR>1 && $4==\\\"{alg}\\\"' {csv_path}\""
            )
            plots.append(
                f"{filt} using 3:{metric_col} smooth unique "
                f"with linespoints title '{alg}'"
            )
        lines.append("plot \\\n    " + ", \\\n    ".join(plots))
    return "\n".join(lines) + "\n"
