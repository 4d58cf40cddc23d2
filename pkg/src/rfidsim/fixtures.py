"""Canned example networks and their frozen expected outcomes.

Three small hand-built topologies (`ex0`, `ex1`, `ex2`, plus the `ex0`
variant with its last tag deleted) exercise every scheme's interesting
behaviour at desk-check size. The golden tables below were derived by hand
from the scheme definitions and are the ground truth for the `examples` CLI
command and for the regression tests; do not regenerate them from the code
they are meant to check.
"""

from __future__ import annotations

from fractions import Fraction

from .algorithms import AlgorithmId, run
from .network import RfidNetwork, build_explicit
from .oracles import (
    compute_metrics,
    oa_characterization,
    optimal_redundant_count,
    verify_coverage,
)
from .tagmem import TagStatus

__all__ = ["ex0", "ex0_minus_last_tag", "ex1", "ex2", "FIXTURES", "golden_checks"]


def ex0() -> RfidNetwork:
    """Three readers in a row over five tags; only the middle reader is
    removable."""
    return build_explicit(
        3,
        5,
        [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4)],
    )


def ex0_minus_last_tag() -> RfidNetwork:
    """ex0 without tag 4: simultaneous removal of both 'redundant' readers
    would now uncover tags 2 and 3."""
    return build_explicit(
        3,
        4,
        [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3)],
    )


def ex1() -> RfidNetwork:
    """Three readers over six tags with a large middle overlap; exactly one
    reader (1) is safely removable but count competition never sees it."""
    return build_explicit(
        3,
        6,
        [
            (0, 0), (0, 1), (0, 2),
            (1, 1), (1, 2), (1, 3), (1, 4),
            (2, 3), (2, 4), (2, 5),
        ],
    )


def ex2() -> RfidNetwork:
    """Three readers over four tags; the big middle reader covers everything,
    both outer readers are jointly removable."""
    return build_explicit(
        3,
        4,
        [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (2, 3)],
    )


FIXTURES = {
    "ex0": ex0,
    "ex0-minus-last-tag": ex0_minus_last_tag,
    "ex1": ex1,
    "ex2": ex2,
}

_ORDERS3 = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))

_E = frozenset()

# ex1: what each scheme detects under each of the six visiting orders
EX1_DETECTED: dict[AlgorithmId, dict[tuple[int, ...], frozenset[int]]] = {
    AlgorithmId.RRE: {
        (0, 1, 2): _E, (0, 2, 1): _E, (1, 0, 2): _E,
        (1, 2, 0): _E, (2, 0, 1): _E, (2, 1, 0): _E,
    },
    AlgorithmId.LEO: {
        (0, 1, 2): _E, (0, 2, 1): frozenset({1}), (1, 0, 2): _E,
        (1, 2, 0): _E, (2, 0, 1): frozenset({1}), (2, 1, 0): _E,
    },
    AlgorithmId.LEO_RRE: {
        (0, 1, 2): _E, (0, 2, 1): frozenset({1}), (1, 0, 2): _E,
        (1, 2, 0): _E, (2, 0, 1): frozenset({1}), (2, 1, 0): _E,
    },
    AlgorithmId.OA: {
        (0, 1, 2): frozenset({1}), (0, 2, 1): frozenset({1}),
        (1, 0, 2): frozenset({1}), (1, 2, 0): frozenset({1}),
        (2, 0, 1): frozenset({1}), (2, 1, 0): frozenset({1}),
    },
}

EX1_OPTIMAL = 1
EX1_POD = {
    AlgorithmId.LEO: Fraction(1, 3),
    AlgorithmId.RRE: Fraction(0),
    AlgorithmId.LEO_RRE: Fraction(1, 3),
    AlgorithmId.OA: Fraction(1),
}
EX1_PRD_LEO = Fraction(1, 3)

EX2_OPTIMAL = 2
EX2_POD = {
    AlgorithmId.LEO: Fraction(1, 3),
    AlgorithmId.RRE: Fraction(1),
    AlgorithmId.LEO_RRE: Fraction(1),
    AlgorithmId.OA: Fraction(1),
}
EX2_PRD_LEO = Fraction(2, 3)

# ex2 under LEO, per order (first-come holding is order-fragile here)
EX2_LEO_DETECTED = {
    (0, 1, 2): frozenset({2}),
    (0, 2, 1): _E,
    (1, 0, 2): frozenset({0, 2}),
    (1, 2, 0): frozenset({0, 2}),
    (2, 0, 1): _E,
    (2, 1, 0): frozenset({0}),
}


def _fmt(value) -> str:
    if isinstance(value, frozenset):
        return "{" + ",".join(str(v) for v in sorted(value)) + "}"
    return str(value)


class _Check:
    """Accumulates expected/actual comparisons for one named golden check."""

    def __init__(self, name: str):
        self.name = name
        self.failures: list[str] = []

    def eq(self, label: str, actual, expected) -> None:
        if actual != expected:
            self.failures.append(
                f"{label}: expected {_fmt(expected)}, got {_fmt(actual)}"
            )


def golden_checks(backend=None) -> list[tuple[str, bool, str]]:
    """Replay every frozen example; returns (name, ok, detail) triples."""
    checks: list[_Check] = []

    c = _Check("ex0 multiplicity detection")
    net = ex0()
    c.eq("naive", run(AlgorithmId.NAIVE, net, backend=backend).redundant,
         frozenset({1}))
    c.eq("characterization", oa_characterization(net), frozenset({1}))
    c.eq("optimal", optimal_redundant_count(net), 1)
    checks.append(c)

    c = _Check("ex0-minus-last-tag simultaneous removal is unsafe")
    net = ex0_minus_last_tag()
    c.eq("naive", run(AlgorithmId.NAIVE, net, backend=backend).redundant,
         frozenset({1, 2}))
    c.eq("oa", run(AlgorithmId.OA, net, backend=backend).redundant,
         frozenset({1, 2}))
    verdict = verify_coverage(net, {1, 2})
    c.eq("preserved", verdict.preserved, False)
    c.eq("uncovered", verdict.uncovered, frozenset({2, 3}))
    c.eq("optimal", optimal_redundant_count(net), 1)
    checks.append(c)

    c = _Check("ex1 detection by order")
    net = ex1()
    for alg, table in EX1_DETECTED.items():
        for order, expected in table.items():
            got = run(alg, net, order, backend=backend).redundant
            c.eq(f"{alg.token} {order}", got, expected)
    checks.append(c)

    c = _Check("ex1 order statistics")
    net = ex1()
    c.eq("optimal", optimal_redundant_count(net), EX1_OPTIMAL)
    for alg, expected in EX1_POD.items():
        rep = compute_metrics(net, alg, backend=backend)
        c.eq(f"pod {alg.token}",
             Fraction(rep.optimal_orders, rep.orders_evaluated), expected)
    rep = compute_metrics(net, AlgorithmId.LEO, backend=backend)
    c.eq("prd leo", Fraction(rep.detected_orders, rep.orders_evaluated),
         EX1_PRD_LEO)
    checks.append(c)

    c = _Check("ex1 first-come-first-hold trace")
    net = ex1()
    res = run(AlgorithmId.LEO, net, (0, 2, 1), backend=backend)
    c.eq("redundant", res.redundant, frozenset({1}))
    c.eq("writes", res.writes_total, 6)
    c.eq("holders", tuple(int(h) for h in res.holder_by_tag),
         (0, 0, 0, 2, 2, 2))
    res = run(AlgorithmId.LEO, net, (0, 1, 2), backend=backend)
    c.eq("redundant B", res.redundant, _E)
    c.eq("holders B", tuple(int(h) for h in res.holder_by_tag),
         (0, 0, 0, 1, 1, 2))
    checks.append(c)

    c = _Check("ex1 claim/mark/lock trace")
    net = ex1()
    res = run(AlgorithmId.OA, net, (1, 0, 2), backend=backend)
    c.eq("redundant", res.redundant, frozenset({1}))
    c.eq("writes", res.writes_total, 14)
    c.eq("writes per reader", res.writes_per_reader, {0: 5, 1: 4, 2: 5})
    c.eq("holders", tuple(int(h) for h in res.holder_by_tag),
         (0, 1, 1, 1, 1, 2))
    c.eq("statuses", tuple(TagStatus(int(s)) for s in res.status_by_tag),
         (TagStatus.NULL, TagStatus.LOCK, TagStatus.LOCK, TagStatus.LOCK,
          TagStatus.LOCK, TagStatus.NULL))
    checks.append(c)

    c = _Check("ex1 announce-then-compete trace")
    net = ex1()
    res = run(AlgorithmId.DRRE, net, (0, 1, 2), backend=backend)
    c.eq("redundant", res.redundant, _E)
    c.eq("writes", res.writes_total, 18)
    c.eq("holders", tuple(int(h) for h in res.holder_by_tag),
         (0, 1, 1, 1, 1, 2))
    c.eq("counts", tuple(int(v) for v in res.count_by_tag), (1, 2, 2, 2, 2, 1))
    checks.append(c)

    c = _Check("ex2 count-competition trace")
    net = ex2()
    res = run(AlgorithmId.RRE, net, (0, 1, 2), backend=backend)
    c.eq("redundant", res.redundant, frozenset({0, 2}))
    c.eq("writes", res.writes_total, 6)
    c.eq("writes per reader", res.writes_per_reader, {0: 2, 1: 4})
    for order in _ORDERS3:
        r = run(AlgorithmId.RRE, net, order, backend=backend)
        c.eq(f"redundant {order}", r.redundant, frozenset({0, 2}))
        c.eq(f"holders {order}", tuple(int(h) for h in r.holder_by_tag),
             (1, 1, 1, 1))
        c.eq(f"counts {order}", tuple(int(v) for v in r.count_by_tag),
             (4, 4, 4, 4))
    checks.append(c)

    c = _Check("ex2 first-come detection by order")
    net = ex2()
    for order, expected in EX2_LEO_DETECTED.items():
        got = run(AlgorithmId.LEO, net, order, backend=backend).redundant
        c.eq(f"leo {order}", got, expected)
    checks.append(c)

    c = _Check("ex2 order statistics")
    net = ex2()
    c.eq("optimal", optimal_redundant_count(net), EX2_OPTIMAL)
    for alg, expected in EX2_POD.items():
        rep = compute_metrics(net, alg, backend=backend)
        c.eq(f"pod {alg.token}",
             Fraction(rep.optimal_orders, rep.orders_evaluated), expected)
    rep = compute_metrics(net, AlgorithmId.LEO, backend=backend)
    c.eq("prd leo", Fraction(rep.detected_orders, rep.orders_evaluated),
         EX2_PRD_LEO)
    checks.append(c)

    c = _Check("ex2 claim/mark/lock trace")
    net = ex2()
    res = run(AlgorithmId.OA, net, (0, 1, 2), backend=backend)
    c.eq("redundant", res.redundant, frozenset({0, 2}))
    c.eq("writes", res.writes_total, 10)
    c.eq("holders", tuple(int(h) for h in res.holder_by_tag), (0, 0, 1, 1))
    c.eq("statuses", tuple(TagStatus(int(s)) for s in res.status_by_tag),
         (TagStatus.LOCK, TagStatus.LOCK, TagStatus.NULL, TagStatus.LOCK))
    c.eq("characterization", oa_characterization(net), frozenset({0, 2}))
    checks.append(c)

    c = _Check("ex2 announce-then-compete detection")
    net = ex2()
    res = run(AlgorithmId.DRRE, net, (0, 1, 2), backend=backend)
    c.eq("redundant", res.redundant, frozenset({0, 2}))
    checks.append(c)

    return [
        (c.name, not c.failures, "; ".join(c.failures)) for c in checks
    ]
