"""Throughput comparison: compiled kernels vs the pure Python reference.

Usage::

    python3 benchmarks/bench_backends.py [--nr 100] [--nt 2000] [--rad 500]
                                         [--trials 20] [--seed 1]

Each trial generates one random scenario plus a shuffled visiting order and
times every detection scheme on both backends (when both are available).
"""

from __future__ import annotations

import argparse
import time

from rfidsim import AlgorithmId, ScenarioConfig, generate_trial, run
from rfidsim.backend import available_backends, get_backend
from rfidsim.scenario import derive_trial_seed


def bench(args) -> None:
    backends = [get_backend(name) for name in available_backends()]
    tokens = [a.token for a in AlgorithmId]
    trials = []
    for k in range(args.trials):
        cfg = ScenarioConfig(
            reader_count=args.nr,
            tag_count=args.nt,
            radius=args.rad,
            seed=derive_trial_seed(args.seed, "bench", 0, k),
        )
        trials.append(generate_trial(cfg))

    print(
        f"nr={args.nr} nt={args.nt} rad={args.rad} trials={args.trials} "
        f"backends={[b.name for b in backends]}"
    )
    print(f"{'scheme':<10}" + "".join(f"{b.name + ' ms':>14}" for b in backends)
          + (f"{'speedup':>10}" if len(backends) == 2 else ""))
    for token in tokens:
        cells = []
        for backend in backends:
            start = time.perf_counter()
            for net, order in trials:
                run(token, net, order, backend=backend)
            cells.append((time.perf_counter() - start) * 1e3 / args.trials)
        row = f"{token:<10}" + "".join(f"{ms:>14.3f}" for ms in cells)
        if len(cells) == 2:
            row += f"{cells[1] / cells[0]:>9.1f}x"
        print(row)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nr", type=int, default=100)
    parser.add_argument("--nt", type=int, default=2000)
    parser.add_argument("--rad", type=float, default=500.0)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=1)
    bench(parser.parse_args())


if __name__ == "__main__":
    main()
