"""Shared test utilities."""

from __future__ import annotations

import random

from rfidsim import RfidNetwork, build_explicit


def random_explicit_net(
    rng: random.Random, max_readers: int = 6, max_tags: int = 12
) -> RfidNetwork:
    """Small random explicit network; edge density drawn per network so the
    corpus mixes sparse and dense coverage."""
    m = rng.randint(1, max_readers)
    n = rng.randint(1, max_tags)
    density = rng.uniform(0.08, 0.6)
    pairs = [
        (i, t) for i in range(m) for t in range(n) if rng.random() < density
    ]
    return build_explicit(m, n, pairs)


def sum_coverage(net: RfidNetwork) -> int:
    return sum(len(net.coverage[i]) for i in range(net.reader_count))
