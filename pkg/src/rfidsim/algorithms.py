"""Public entry points for the six detection schemes.

Every scheme consumes a network plus a visiting order (a permutation of all
reader ids) and produces a DetectionResult: the detected-redundant set, write
costs, and the final tag memories. Runs are pure functions of (network,
order); nothing is cached between runs and running twice gives equal results.

Scheme tokens: naive, rre, leo, leo_rre, oa, drre.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .backend import Backend, get_backend
from .network import RfidNetwork
from .tagmem import TagMemory, TagStatus

__all__ = [
    "AlgorithmId",
    "DetectionResult",
    "validate_order",
    "run",
    "run_naive",
    "run_rre",
    "run_leo",
    "run_leo_rre",
    "run_oa",
    "run_drre",
    "format_result",
]


class AlgorithmId(enum.Enum):
    NAIVE = "naive"
    RRE = "rre"
    LEO = "leo"
    LEO_RRE = "leo_rre"
    OA = "oa"
    DRRE = "drre"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "AlgorithmId":
        norm = text.strip().lower()
        aliases = {"leo+rre": "leo_rre", "lrre": "leo_rre"}
        norm = aliases.get(norm, norm)
        for member in cls:
            if member.value == norm:
                return member
        raise ValueError(f"unknown algorithm {text!r}")


@dataclass(eq=False)
class DetectionResult:
    algorithm: AlgorithmId
    order: tuple[int, ...]
    redundant: frozenset[int]
    writes_total: int
    writes_per_reader: dict[int, int]
    holder_by_tag: np.ndarray
    count_by_tag: np.ndarray
    status_by_tag: np.ndarray
    network: RfidNetwork = field(repr=False)

    @cached_property
    def final_tags(self) -> tuple[TagMemory, ...]:
        """Final per-tag memories. For the announce-then-compete scheme the
        coverer lists are reconstructed (coverers of the tag in visit order);
        all other schemes leave them empty."""
        rank = {r: k for k, r in enumerate(self.order)}
        tags = []
        for t in range(self.network.tag_count):
            h = int(self.holder_by_tag[t])
            lst: list[int] = []
            if self.algorithm is AlgorithmId.DRRE:
                lst = sorted(self.network.coverers(t), key=rank.__getitem__)
            tags.append(
                TagMemory(
                    holder=None if h < 0 else h,
                    tag_count=int(self.count_by_tag[t]),
                    status=TagStatus(int(self.status_by_tag[t])),
                    coverer_list=lst,
                )
            )
        return tuple(tags)


def validate_order(net: RfidNetwork, order: Iterable[int]) -> tuple[int, ...]:
    """Check `order` is a permutation of all reader ids; returns it as a tuple."""
    out = tuple(int(i) for i in order)
    if sorted(out) != list(range(net.reader_count)):
        raise ValueError(
            f"order must be a permutation of 0..{net.reader_count - 1}, got {out}"
        )
    return out


def run(
    algorithm: AlgorithmId | str,
    net: RfidNetwork,
    order: Sequence[int] | None = None,
    *,
    backend: Backend | str | None = None,
) -> DetectionResult:
    """Run one detection scheme over the network in the given order.

    `order` defaults to ascending reader ids. `backend` picks the kernel set
    (name or Backend); default follows the import-time selection.
    """
    if isinstance(algorithm, str):
        algorithm = AlgorithmId.parse(algorithm)
    if order is None:
        order = range(net.reader_count)
    order = validate_order(net, order)
    if not isinstance(backend, Backend):
        backend = get_backend(backend)
    red, wpr, holder, value, status = backend.run(algorithm.token, net, order)
    redundant = frozenset(int(i) for i in np.flatnonzero(red))
    per_reader = {i: int(w) for i, w in enumerate(wpr) if w}
    return DetectionResult(
        algorithm=algorithm,
        order=order,
        redundant=redundant,
        writes_total=int(wpr.sum()),
        writes_per_reader=per_reader,
        holder_by_tag=holder,
        count_by_tag=value,
        status_by_tag=status,
        network=net,
    )


def run_naive(net: RfidNetwork, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.NAIVE, net, backend=backend)


def run_rre(net: RfidNetwork, order=None, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.RRE, net, order, backend=backend)


def run_leo(net: RfidNetwork, order=None, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.LEO, net, order, backend=backend)


def run_leo_rre(net: RfidNetwork, order=None, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.LEO_RRE, net, order, backend=backend)


def run_oa(net: RfidNetwork, order=None, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.OA, net, order, backend=backend)


def run_drre(net: RfidNetwork, order=None, *, backend=None) -> DetectionResult:
    return run(AlgorithmId.DRRE, net, order, backend=backend)


_STATUS_TOKEN = {TagStatus.NULL: "null", TagStatus.OVERLAP: "overlap", TagStatus.LOCK: "lock"}


def format_result(result: DetectionResult) -> str:
    """Stable text rendering used by the CLI and the golden-file tests.

    Line shapes::

        result <token> <order as comma list>
        redundant <ids as comma list; bare 'redundant' if none>
        writes <total>
        tagstate <tag> <holder or -> <count> <null|overlap|lock>
    """
    lines = [
        f"result {result.algorithm.token} {','.join(str(i) for i in result.order)}"
    ]
    red = ",".join(str(i) for i in sorted(result.redundant))
    lines.append(f"redundant {red}".rstrip())
    lines.append(f"writes {result.writes_total}")
    for t, mem in enumerate(result.final_tags):
        holder = "-" if mem.holder is None else str(mem.holder)
        lines.append(
            f"tagstate {t} {holder} {mem.tag_count} {_STATUS_TOKEN[mem.status]}"
        )
    return "\n".join(lines) + "\n"
