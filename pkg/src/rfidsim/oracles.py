"""Ground-truth and exhaustive-search utilities.

These answer questions the detection schemes themselves cannot: the largest
safely removable reader set (exact, via minimum set cover), whether a given
removal preserves coverage, the order-free characterization the claim/mark/
lock scheme realizes, and the probability metrics obtained by enumerating
every visiting order.

Exact search is exponential, so the enumerating entry points carry explicit
guards and refuse oversized inputs instead of silently running forever.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .algorithms import AlgorithmId, run
from .network import RfidNetwork

__all__ = [
    "GuardRefusal",
    "CoverageVerdict",
    "MetricsReport",
    "verify_coverage",
    "optimal_redundant_count",
    "greedy_redundant_lower_bound",
    "oa_characterization",
    "compute_metrics",
    "pod",
    "prd",
]

MAX_COVER_READERS = 20
MAX_METRICS_READERS = 8


class GuardRefusal(RuntimeError):
    """Raised when an exhaustive computation would exceed its size guard."""


@dataclass(frozen=True)
class CoverageVerdict:
    preserved: bool
    uncovered: frozenset[int]


def verify_coverage(net: RfidNetwork, removed: Iterable[int]) -> CoverageVerdict:
    """Would removing `removed` leave every initially covered tag covered?

    Tags with no coverer to begin with are ignored; `uncovered` lists the
    covered tags that would lose their last coverer.
    """
    off = frozenset(int(i) for i in removed)
    for i in off:
        if not 0 <= i < net.reader_count:
            raise ValueError(f"removed set names unknown reader {i}")
    uncovered = frozenset(
        t
        for t in range(net.tag_count)
        if net.multiplicity(t) > 0 and all(c in off for c in net.coverers(t))
    )
    return CoverageVerdict(preserved=not uncovered, uncovered=uncovered)


def greedy_redundant_lower_bound(net: RfidNetwork) -> int:
    """Readers minus a greedy set-cover size: a fast lower bound on the exact
    optimum, usable at any scale."""
    remaining = set(net.covered_tags())
    chosen = 0
    masks = {i: set(net.coverage[i]) for i in range(net.reader_count)}
    while remaining:
        best = max(masks, key=lambda i: len(masks[i] & remaining))
        gain = masks[best] & remaining
        if not gain:
            break
        remaining -= gain
        chosen += 1
    return net.reader_count - chosen


def optimal_redundant_count(net: RfidNetwork, max_readers: int = MAX_COVER_READERS) -> int:
    """Largest |D| over reader sets D whose removal keeps every covered tag
    covered. Equals reader count minus a minimum set cover of the covered
    tags; solved exactly by branch and bound over bitmasks.

    Refuses networks with more than `max_readers` readers (exact cover is
    exponential); greedy_redundant_lower_bound has no such limit.
    """
    m = net.reader_count
    if m > max_readers:
        raise GuardRefusal(
            f"exact optimum limited to {max_readers} readers, got {m}; "
            "use greedy_redundant_lower_bound for large networks"
        )
    covered = sorted(net.covered_tags())
    if not covered:
        return m
    bit = {t: k for k, t in enumerate(covered)}
    universe = (1 << len(covered)) - 1
    masks = [0] * m
    for i in range(m):
        for t in net.coverage[i]:
            masks[i] |= 1 << bit[t]

    # readers covering a singly-covered tag are in every cover
    mandatory = {net.coverers(t)[0] for t in covered if net.multiplicity(t) == 1}
    base = 0
    for i in mandatory:
        base |= masks[i]
    rest = universe & ~base

    # candidates restricted to what is still uncovered; drop dominated ones
    cand = []
    for i in range(m):
        if i in mandatory:
            continue
        restricted = masks[i] & rest
        if restricted:
            cand.append((i, restricted))
    cand.sort(key=lambda p: -bin(p[1]).count("1"))
    kept: list[int] = []
    for _, restricted in cand:
        if not any(restricted | k == k for k in kept):
            kept.append(restricted)
    cand_masks = kept

    # greedy completion gives the starting upper bound
    best = len(mandatory)
    remaining = rest
    while remaining:
        gain = max(cand_masks, key=lambda msk: bin(msk & remaining).count("1"))
        remaining &= ~gain
        best += 1

    coverers_of_bit: dict[int, list[int]] = {}
    for b in range(len(covered)):
        if rest >> b & 1:
            coverers_of_bit[b] = [
                k for k, msk in enumerate(cand_masks) if msk >> b & 1
            ]

    max_gain = max((bin(msk).count("1") for msk in cand_masks), default=1)

    def search(chosen: int, remaining: int, best: int) -> int:
        if not remaining:
            return min(best, chosen)
        need = -(-bin(remaining).count("1") // max_gain)
        if chosen + need >= best:
            return best
        # branch on the uncovered tag with fewest candidate coverers
        b = min(
            (b for b in coverers_of_bit if remaining >> b & 1),
            key=lambda b: len(coverers_of_bit[b]),
        )
        options = sorted(
            coverers_of_bit[b],
            key=lambda k: -bin(cand_masks[k] & remaining).count("1"),
        )
        for k in options:
            best = search(chosen + 1, remaining & ~cand_masks[k], best)
        return best

    return m - search(len(mandatory), rest, best)


def oa_characterization(net: RfidNetwork) -> frozenset[int]:
    """Order-free description of what the claim/mark/lock scheme detects:
    readers covering no singly-covered tag."""
    type1 = net.type1_tags()
    return frozenset(
        i
        for i in range(net.reader_count)
        if not any(t in type1 for t in net.coverage[i])
    )


@dataclass(frozen=True)
class MetricsReport:
    """Exhaustive per-order statistics for one (network, algorithm) pair.

    Counts are over all M! visiting orders. An order counts toward
    `optimal_orders` only if the detected set has optimal size AND its
    removal preserves coverage; a maximal-cardinality but unsafe detection
    is not an optimal outcome.
    """

    algorithm: AlgorithmId
    reader_count: int
    optimal: int
    orders_evaluated: int
    optimal_orders: int
    detected_orders: int
    violation_orders: int
    per_order_detected: tuple[tuple[int, int], ...]  # (detected size, #orders)

    @property
    def pod(self) -> float:
        return self.optimal_orders / self.orders_evaluated

    @property
    def prd(self) -> float:
        return self.detected_orders / self.orders_evaluated


def compute_metrics(
    net: RfidNetwork,
    algorithm: AlgorithmId | str,
    *,
    backend=None,
    max_readers: int = MAX_METRICS_READERS,
) -> MetricsReport:
    """Run `algorithm` under every one of the M! orders and tally outcomes."""
    if isinstance(algorithm, str):
        algorithm = AlgorithmId.parse(algorithm)
    m = net.reader_count
    if m > max_readers:
        raise GuardRefusal(
            f"order enumeration limited to {max_readers} readers, got {m}"
        )
    optimal = optimal_redundant_count(net)
    histogram: dict[int, int] = {}
    optimal_orders = 0
    detected_orders = 0
    violation_orders = 0
    total = 0
    for order in itertools.permutations(range(m)):
        result = run(algorithm, net, order, backend=backend)
        size = len(result.redundant)
        histogram[size] = histogram.get(size, 0) + 1
        safe = verify_coverage(net, result.redundant).preserved
        if size >= 1:
            detected_orders += 1
        if not safe:
            violation_orders += 1
        if size == optimal and safe:
            optimal_orders += 1
        total += 1
    return MetricsReport(
        algorithm=algorithm,
        reader_count=m,
        optimal=optimal,
        orders_evaluated=total,
        optimal_orders=optimal_orders,
        detected_orders=detected_orders,
        violation_orders=violation_orders,
        per_order_detected=tuple(sorted(histogram.items())),
    )


def pod(net: RfidNetwork, algorithm, **kw) -> float:
    """Probability (over all orders) of an optimal, coverage-safe detection."""
    return compute_metrics(net, algorithm, **kw).pod


def prd(net: RfidNetwork, algorithm, **kw) -> float:
    """Probability (over all orders) of detecting at least one reader."""
    return compute_metrics(net, algorithm, **kw).prd
