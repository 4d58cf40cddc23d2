"""Acceptance gate: one test per numbered criterion, pinned tolerances.

Every test prints a '[criterion N] ...' line; conftest adds a summary table.
Criterion 6 encodes a write-cost ordering (mean writes LEO <= OA <= RRE <=
DRRE on the reduced sweep) that the measured protocol semantics genuinely
violate on the OA <= RRE leg: the claim/mark/lock scheme pays one write per
covered tag plus two per shared tag, which exceeds the count-competition
sweep's ceiling of one write per coverage pair once shared tags dominate.
The test asserts the ordering as stated and is expected to fail there; the
printed means document the measurement.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from rfidsim import (
    AlgorithmId,
    ExperimentPlan,
    ScenarioConfig,
    compute_metrics,
    fixtures,
    iter_plan_rows,
    oa_characterization,
    run,
    run_plan_to_csv,
    verify_coverage,
)
from helpers import random_explicit_net, sum_coverage

SAFE_ALGS = (AlgorithmId.LEO, AlgorithmId.RRE, AlgorithmId.LEO_RRE, AlgorithmId.DRRE)
CORPUS_ALGS = SAFE_ALGS + (AlgorithmId.OA,)

TREND_PLAN = ExperimentPlan(
    setup="trend",
    param_name="nt",
    sweep=(
        ScenarioConfig(reader_count=100, tag_count=200, radius=500.0),
        ScenarioConfig(reader_count=100, tag_count=1000, radius=500.0),
        ScenarioConfig(reader_count=100, tag_count=4000, radius=500.0),
    ),
    trials_per_point=20,
    master_seed=2024,
)


def test_criterion_1_ex1_detection_table_and_pod():
    start = time.perf_counter()
    net = fixtures.ex1()
    # cell-for-cell detection table
    for alg, table in fixtures.EX1_DETECTED.items():
        for order, expected in table.items():
            assert run(alg, net, order).redundant == expected, (alg, order)
    # shape restated: first-come detects reader 1 exactly when it goes last
    for order in itertools.permutations(range(3)):
        expected = frozenset({1}) if order[-1] == 1 else frozenset()
        assert run(AlgorithmId.LEO, net, order).redundant == expected
        assert run(AlgorithmId.RRE, net, order).redundant == frozenset()
        assert run(AlgorithmId.LEO_RRE, net, order).redundant == expected
        assert run(AlgorithmId.OA, net, order).redundant == frozenset({1})
    # POD row: 33% / 0% / 33% / 100%, exact
    for alg, expected in (
        (AlgorithmId.LEO, Fraction(1, 3)),
        (AlgorithmId.RRE, Fraction(0)),
        (AlgorithmId.LEO_RRE, Fraction(1, 3)),
        (AlgorithmId.OA, Fraction(1)),
    ):
        rep = compute_metrics(net, alg)
        assert Fraction(rep.optimal_orders, rep.orders_evaluated) == expected, alg
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"\n[criterion 1] PASS in {elapsed:.3f}s")


def test_criterion_2_ex2_pod_prd_and_final_state():
    start = time.perf_counter()
    net = fixtures.ex2()
    # POD row: 33% / 100% / 100% / 100%, exact
    for alg, expected in (
        (AlgorithmId.LEO, Fraction(1, 3)),
        (AlgorithmId.RRE, Fraction(1)),
        (AlgorithmId.LEO_RRE, Fraction(1)),
        (AlgorithmId.OA, Fraction(1)),
    ):
        rep = compute_metrics(net, alg)
        assert Fraction(rep.optimal_orders, rep.orders_evaluated) == expected, alg
    # PRD(first-come) = 66%, POD = 33%, exact fractions of 6 orders
    rep = compute_metrics(net, AlgorithmId.LEO)
    assert Fraction(rep.detected_orders, rep.orders_evaluated) == Fraction(2, 3)
    assert Fraction(rep.optimal_orders, rep.orders_evaluated) == Fraction(1, 3)
    # count-competition final state: (reader 1, count 4) on all four tags,
    # in every order
    for order in itertools.permutations(range(3)):
        res = run(AlgorithmId.RRE, net, order)
        for mem in res.final_tags:
            assert (mem.holder, mem.tag_count) == (1, 4)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"\n[criterion 2] PASS in {elapsed:.3f}s")


def test_criterion_3_unsafe_simultaneous_removal():
    net = fixtures.ex0_minus_last_tag()
    assert run(AlgorithmId.NAIVE, net).redundant == frozenset({1, 2})
    for order in itertools.permutations(range(3)):
        assert run(AlgorithmId.OA, net, order).redundant == frozenset({1, 2})
    verdict = verify_coverage(net, {1, 2})
    assert not verdict.preserved
    assert verdict.uncovered == frozenset({2, 3})
    print("\n[criterion 3] PASS")


@pytest.fixture(scope="module")
def corpus_runs():
    """1000 random explicit networks (M <= 6, N <= 12), every scheme under
    every one of the M! orders; shared by criteria 4 and 5."""
    rng = random.Random(0xC0FFEE)
    records = []
    for _ in range(1000):
        net = random_explicit_net(rng, max_readers=6, max_tags=12)
        per_order = []
        for order in itertools.permutations(range(net.reader_count)):
            runs = {
                alg: run(alg, net, order) for alg in CORPUS_ALGS
            }
            per_order.append(
                (
                    order,
                    {alg: res.writes_total for alg, res in runs.items()},
                    {alg: res.redundant for alg, res in runs.items()},
                    {
                        alg: verify_coverage(net, runs[alg].redundant).preserved
                        for alg in SAFE_ALGS
                    },
                )
            )
        records.append(
            {
                "net": net,
                "naive": run(AlgorithmId.NAIVE, net).redundant,
                "char": oa_characterization(net),
                "covered": len(net.covered_tags()),
                "sum_si": sum_coverage(net),
                "orders": per_order,
            }
        )
    return records


def test_criterion_4_write_complexity_bounds(corpus_runs):
    violations = []
    orders_checked = 0
    for k, rec in enumerate(corpus_runs):
        n = rec["net"].tag_count
        covered = rec["covered"]
        sum_si = rec["sum_si"]
        for order, writes, _red, _safe in rec["orders"]:
            orders_checked += 1
            if writes[AlgorithmId.LEO] != covered:
                violations.append(f"net {k} order {order}: leo writes "
                                  f"{writes[AlgorithmId.LEO]} != covered {covered}")
            if writes[AlgorithmId.OA] > 3 * n:
                violations.append(f"net {k} order {order}: oa writes over 3N")
            if writes[AlgorithmId.RRE] > sum_si:
                violations.append(f"net {k} order {order}: rre writes over sum")
            if not sum_si <= writes[AlgorithmId.DRRE] <= 2 * sum_si:
                violations.append(f"net {k} order {order}: drre writes out of band")
    assert len(corpus_runs) == 1000
    assert not violations, "\n".join(violations[:20])
    print(f"\n[criterion 4] PASS over {orders_checked} orders, zero violations")


def test_criterion_5_order_invariance_and_safety(corpus_runs):
    violations = []
    orders_checked = 0
    for k, rec in enumerate(corpus_runs):
        naive_red = rec["naive"]
        char = rec["char"]
        if naive_red != char:
            violations.append(f"net {k}: naive != characterization")
        for order, _writes, red, safe in rec["orders"]:
            orders_checked += 1
            if red[AlgorithmId.OA] != naive_red:
                violations.append(f"net {k} order {order}: oa != naive")
            for alg in SAFE_ALGS:
                if not safe[alg]:
                    violations.append(
                        f"net {k} order {order}: {alg.token} broke coverage"
                    )
    assert not violations, "\n".join(violations[:20])
    print(f"\n[criterion 5] PASS over {orders_checked} orders, zero violations")


def _trend_means(rows):
    acc: dict[tuple[int, AlgorithmId], list[float]] = {}
    wcc: dict[tuple[int, AlgorithmId], list[float]] = {}
    for row in rows:
        acc.setdefault((row.param_value, row.algorithm), []).append(row.detected)
        wcc.setdefault((row.param_value, row.algorithm), []).append(row.writes)
    det = {key: sum(v) / len(v) for key, v in acc.items()}
    writes = {key: sum(v) / len(v) for key, v in wcc.items()}
    return det, writes


def test_criterion_6_reduced_sweep_trends():
    start = time.perf_counter()
    rows = list(iter_plan_rows(TREND_PLAN))
    elapsed = time.perf_counter() - start
    det, writes = _trend_means(rows)
    points = [cfg.tag_count for cfg in TREND_PLAN.sweep]
    comparison = (AlgorithmId.LEO, AlgorithmId.OA, AlgorithmId.RRE, AlgorithmId.DRRE)

    print(f"\n[criterion 6] reduced sweep means ({elapsed:.1f}s, "
          f"{TREND_PLAN.trials_per_point} trials/point)")
    print(f"{'nt':>6} | " + " ".join(f"{a.token:>9}" for a in AlgorithmId)
          + "   (mean detected)")
    for nt in points:
        print(f"{nt:>6} | "
              + " ".join(f"{det[(nt, a)]:>9.2f}" for a in AlgorithmId))
    print(f"{'nt':>6} | " + " ".join(f"{a.token:>9}" for a in comparison)
          + "   (mean writes)")
    for nt in points:
        print(f"{nt:>6} | "
              + " ".join(f"{writes[(nt, a)]:>9.1f}" for a in comparison))

    violations = []
    if elapsed >= 120.0:
        violations.append(f"sweep took {elapsed:.1f}s, budget is 120s")
    others = (AlgorithmId.LEO, AlgorithmId.RRE, AlgorithmId.LEO_RRE,
              AlgorithmId.DRRE)
    for nt in points:
        for alg in others:
            if det[(nt, AlgorithmId.OA)] < det[(nt, alg)]:
                violations.append(
                    f"nt={nt}: mean detected oa {det[(nt, AlgorithmId.OA)]:.2f} "
                    f"< {alg.token} {det[(nt, alg)]:.2f}"
                )
        chain = [writes[(nt, a)] for a in comparison]
        for (low_alg, low), (high_alg, high) in zip(
            zip(comparison, chain), zip(comparison[1:], chain[1:])
        ):
            if low > high:
                violations.append(
                    f"nt={nt}: mean writes {low_alg.token} {low:.1f} "
                    f"> {high_alg.token} {high:.1f}"
                )
    first, last = points[0], points[-1]
    ratio_first = det[(first, AlgorithmId.RRE)] / det[(first, AlgorithmId.OA)]
    ratio_last = det[(last, AlgorithmId.RRE)] / det[(last, AlgorithmId.OA)]
    print(f"rre/oa detected ratio: nt={first}: {ratio_first:.3f}  "
          f"nt={last}: {ratio_last:.3f}")
    if not ratio_last < ratio_first:
        violations.append("rre/oa detected ratio did not degrade with density")

    assert not violations, "\n".join(violations)
    print("[criterion 6] PASS")


def test_criterion_7_rerun_is_byte_identical(tmp_path):
    first = tmp_path / "trend_a.csv"
    second = tmp_path / "trend_b.csv"
    rows_a = run_plan_to_csv(TREND_PLAN, first)
    rows_b = run_plan_to_csv(TREND_PLAN, second)
    assert rows_a == rows_b == 3 * 20 * 6
    assert first.read_bytes() == second.read_bytes()
    print("\n[criterion 7] PASS: rerun produced identical bytes")
