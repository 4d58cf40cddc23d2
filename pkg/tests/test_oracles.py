import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rfidsim import (
    AlgorithmId,
    GuardRefusal,
    build_explicit,
    compute_metrics,
    fixtures,
    generate,
    greedy_redundant_lower_bound,
    oa_characterization,
    optimal_redundant_count,
    pod,
    prd,
    run,
    run_naive,
    ScenarioConfig,
    verify_coverage,
)
from helpers import random_explicit_net


def brute_optimal(net):
    # exhaustive oracle: max removable subset leaving all covered tags covered
    best = 0
    ids = range(net.reader_count)
    for size in range(net.reader_count, -1, -1):
        for subset in itertools.combinations(ids, size):
            if verify_coverage(net, subset).preserved:
                return size
    return best


def test_verify_coverage_examples():
    net = fixtures.ex0_minus_last_tag()
    verdict = verify_coverage(net, {1, 2})
    assert not verdict.preserved
    assert verdict.uncovered == frozenset({2, 3})
    assert verify_coverage(net, {1}).preserved
    assert verify_coverage(net, set()).preserved
    with pytest.raises(ValueError, match="unknown reader"):
        verify_coverage(net, {7})


def test_verify_coverage_ignores_initially_uncovered():
    net = build_explicit(1, 2, [(0, 0)])
    assert verify_coverage(net, set()).preserved
    verdict = verify_coverage(net, {0})
    assert verdict.uncovered == frozenset({0})  # tag 1 never counted


def test_optimal_on_fixtures():
    assert optimal_redundant_count(fixtures.ex0()) == 1
    assert optimal_redundant_count(fixtures.ex0_minus_last_tag()) == 1
    assert optimal_redundant_count(fixtures.ex1()) == 1
    assert optimal_redundant_count(fixtures.ex2()) == 2


def test_optimal_edge_cases():
    assert optimal_redundant_count(build_explicit(1, 1, [(0, 0)])) == 0
    # a reader covering nothing is always removable
    assert optimal_redundant_count(build_explicit(2, 1, [(0, 0)])) == 1
    # no coverage at all: everyone is removable
    assert optimal_redundant_count(build_explicit(3, 2, [])) == 3


def test_optimal_guard():
    cfg = ScenarioConfig(reader_count=21, tag_count=5, radius=3000.0, seed=1)
    net = generate(cfg)
    with pytest.raises(GuardRefusal, match="greedy"):
        optimal_redundant_count(net)
    # the greedy bound still answers
    assert 0 <= greedy_redundant_lower_bound(net) <= 21


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_optimal_matches_exhaustive_oracle(seed):
    net = random_explicit_net(random.Random(seed), max_readers=7, max_tags=10)
    assert optimal_redundant_count(net) == brute_optimal(net)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_greedy_is_a_lower_bound(seed):
    net = random_explicit_net(random.Random(seed), max_readers=7, max_tags=10)
    greedy = greedy_redundant_lower_bound(net)
    exact = optimal_redundant_count(net)
    assert greedy <= exact
    assert verify_coverage(net, ()).preserved  # sanity: empty removal safe


def test_characterization_examples():
    assert oa_characterization(fixtures.ex0()) == frozenset({1})
    assert oa_characterization(fixtures.ex1()) == frozenset({1})
    assert oa_characterization(fixtures.ex2()) == frozenset({0, 2})
    assert oa_characterization(fixtures.ex0_minus_last_tag()) == frozenset({1, 2})


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_characterization_equals_multiplicity_rule(seed):
    net = random_explicit_net(random.Random(seed))
    assert oa_characterization(net) == run_naive(net).redundant


def test_metrics_ex1():
    net = fixtures.ex1()
    for alg, expected in fixtures.EX1_POD.items():
        rep = compute_metrics(net, alg)
        assert rep.orders_evaluated == 6
        assert Fraction(rep.optimal_orders, 6) == expected
        assert sum(count for _, count in rep.per_order_detected) == 6
        assert rep.violation_orders == 0
    assert prd(net, AlgorithmId.LEO) == pytest.approx(float(fixtures.EX1_PRD_LEO))


def test_metrics_ex2():
    net = fixtures.ex2()
    for alg, expected in fixtures.EX2_POD.items():
        rep = compute_metrics(net, alg)
        assert Fraction(rep.optimal_orders, 6) == expected
    rep = compute_metrics(net, AlgorithmId.LEO)
    assert Fraction(rep.detected_orders, 6) == fixtures.EX2_PRD_LEO
    assert rep.per_order_detected == ((0, 2), (1, 2), (2, 2))
    assert pod(net, AlgorithmId.OA) == 1.0


def test_metrics_histogram_and_guard():
    net = fixtures.ex0()
    rep = compute_metrics(net, AlgorithmId.NAIVE)
    # order-free scheme: all six orders land in one histogram bucket
    assert rep.per_order_detected == ((1, 6),)
    assert rep.pod == 1.0
    big = generate(ScenarioConfig(reader_count=9, tag_count=5, radius=3000.0, seed=2))
    with pytest.raises(GuardRefusal, match="9"):
        compute_metrics(big, AlgorithmId.LEO)


def test_metrics_safety_filter():
    # a maximal-size but coverage-breaking detection must not count as optimal
    net = fixtures.ex0_minus_last_tag()
    rep = compute_metrics(net, AlgorithmId.OA)
    assert rep.optimal == 1
    assert rep.violation_orders == 6  # {1, 2} breaks coverage in every order
    assert rep.optimal_orders == 0
    assert rep.detected_orders == 6
    assert rep.pod == 0.0
    assert rep.prd == 1.0


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_pod_at_most_prd_when_optimum_positive(seed):
    net = random_explicit_net(random.Random(seed), max_readers=4, max_tags=8)
    rep = compute_metrics(net, AlgorithmId.LEO)
    if rep.optimal >= 1:
        assert rep.pod <= rep.prd
    else:
        # nothing is removable; detecting anything would be a violation
        assert rep.optimal == 0


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_metrics_agree_with_direct_enumeration(seed):
    net = random_explicit_net(random.Random(seed), max_readers=4, max_tags=6)
    rep = compute_metrics(net, AlgorithmId.RRE)
    m = net.reader_count
    opt = optimal_redundant_count(net)
    expected_detected = 0
    expected_optimal = 0
    total = 0
    for order in itertools.permutations(range(m)):
        red = run(AlgorithmId.RRE, net, order).redundant
        total += 1
        if red:
            expected_detected += 1
        if len(red) == opt and verify_coverage(net, red).preserved:
            expected_optimal += 1
    assert rep.orders_evaluated == total
    assert rep.detected_orders == expected_detected
    assert rep.optimal_orders == expected_optimal
