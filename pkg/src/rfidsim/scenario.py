"""Deterministic random scenario generation and experiment plans.

Reproducibility contract: placements come from the stdlib Mersenne Twister
(random.Random) seeded with a caller-supplied 64-bit integer. For one
generation the draw order is fixed: reader x then y in id order, then tag x
then y in id order, then (for generate_trial) one shuffle of the ascending
reader list. Coordinates are quantized to 6 fractional digits at draw time,
so a generated network round-trips bit-exactly through the canonical file
format. Same seed, same platform or not: same network bytes.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .netfile import canonical_real
from .network import Point2D, ReaderSpec, RfidNetwork, TagSpec, build_geometric

__all__ = [
    "PRNG_NAME",
    "ScenarioConfig",
    "ExperimentPlan",
    "generate",
    "generate_trial",
    "derive_trial_seed",
    "plan",
    "SETUP_NAMES",
]

PRNG_NAME = "python-mt19937"

SETUP_NAMES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class ScenarioConfig:
    """One random-placement scenario: readers and tags uniform over a square
    working area, every reader with the same detection radius."""

    reader_count: int
    tag_count: int
    radius: float
    area_side: float = 10000.0
    seed: int = 0

    def __post_init__(self):
        if self.reader_count < 1 or self.tag_count < 1:
            raise ValueError("reader_count and tag_count must be at least 1")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if not self.area_side > 0:
            raise ValueError("area_side must be positive")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def header_comment(self) -> str:
        return (
            f"config NR={self.reader_count} NT={self.tag_count} "
            f"Rad={canonical_real(self.radius)} seed={self.seed} prng={PRNG_NAME}"
        )


def _draw(rng: random.Random, side: float) -> float:
    return round(side * rng.random(), 6)


def _place(
    config: ScenarioConfig, rng: random.Random
) -> tuple[list[ReaderSpec], list[TagSpec]]:
    readers = []
    for i in range(config.reader_count):
        x = _draw(rng, config.area_side)
        y = _draw(rng, config.area_side)
        readers.append(ReaderSpec(i, Point2D(x, y), float(config.radius)))
    tags = []
    for t in range(config.tag_count):
        x = _draw(rng, config.area_side)
        y = _draw(rng, config.area_side)
        tags.append(TagSpec(t, Point2D(x, y)))
    return readers, tags


def generate(config: ScenarioConfig) -> RfidNetwork:
    """Place readers then tags uniformly at random and derive coverage."""
    rng = random.Random(config.seed)
    readers, tags = _place(config, rng)
    return build_geometric(
        readers, tags, header_comments=(config.header_comment(),)
    )


def generate_trial(config: ScenarioConfig) -> tuple[RfidNetwork, tuple[int, ...]]:
    """Generate the network, then draw the trial's visiting order from the
    same stream (one shuffle after all placements). The network is identical
    to what generate() yields for the same config."""
    rng = random.Random(config.seed)
    readers, tags = _place(config, rng)
    order = list(range(config.reader_count))
    rng.shuffle(order)
    net = build_geometric(readers, tags, header_comments=(config.header_comment(),))
    return net, tuple(order)


def derive_trial_seed(
    master_seed: int, setup: str, point_index: int, trial_index: int
) -> int:
    """Stable per-trial seed: first 8 bytes (big endian) of the SHA-256 of
    "master:setup:point:trial"."""
    text = f"{master_seed}:{setup}:{point_index}:{trial_index}"
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class ExperimentPlan:
    """A parameter sweep: one ScenarioConfig per point (seed field unused;
    per-trial seeds are derived), a fixed trial count per point, and the
    master seed everything derives from."""

    setup: str
    param_name: str
    sweep: tuple[ScenarioConfig, ...]
    trials_per_point: int
    master_seed: int

    def trial_config(self, point_index: int, trial_index: int) -> ScenarioConfig:
        base = self.sweep[point_index]
        seed = derive_trial_seed(
            self.master_seed, self.setup, point_index, trial_index
        )
        return ScenarioConfig(
            reader_count=base.reader_count,
            tag_count=base.tag_count,
            radius=base.radius,
            area_side=base.area_side,
            seed=seed,
        )

    def param_value(self, point_index: int):
        cfg = self.sweep[point_index]
        return {
            "nt": cfg.tag_count,
            "nr": cfg.reader_count,
            "rad": cfg.radius,
        }[self.param_name]


def plan(
    setup: str, trials_per_point: int = 50, master_seed: int = 0
) -> ExperimentPlan:
    """The four stock sweeps over a 10000 x 10000 area.

    I   : NR=500, Rad=500, NT = 100..1000 step 100
    II  : NR=500, Rad=500, NT = 1000..10000 step 1000
    III : NT=10000, Rad=500, NR = 100..500 step 100
    IV  : NR=500, NT=10000, Rad = 100..1000 step 100
    """
    setup = setup.upper()
    if setup not in SETUP_NAMES:
        raise ValueError(f"unknown setup {setup!r}; expected one of {SETUP_NAMES}")
    if trials_per_point < 1:
        raise ValueError("trials_per_point must be at least 1")
    if setup == "I":
        param = "nt"
        sweep = [
            ScenarioConfig(500, nt, 500.0) for nt in range(100, 1001, 100)
        ]
    elif setup == "II":
        param = "nt"
        sweep = [
            ScenarioConfig(500, nt, 500.0) for nt in range(1000, 10001, 1000)
        ]
    elif setup == "III":
        param = "nr"
        sweep = [
            ScenarioConfig(nr, 10000, 500.0) for nr in range(100, 501, 100)
        ]
    else:
        param = "rad"
        sweep = [
            ScenarioConfig(500, 10000, float(rad)) for rad in range(100, 1001, 100)
        ]
    return ExperimentPlan(
        setup=setup,
        param_name=param,
        sweep=tuple(sweep),
        trials_per_point=trials_per_point,
        master_seed=master_seed,
    )
