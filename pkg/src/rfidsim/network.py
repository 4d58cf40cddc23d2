"""Reader/tag network model.

A network is an immutable set of readers and tags plus a coverage relation:
``coverage[i]`` lists the tags reader ``i`` can write to. The relation is
either derived from planar geometry (disk ranges, closed boundary) or supplied
explicitly as (reader, tag) pairs for hand-built topologies.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple

import numpy as np

__all__ = [
    "Point2D",
    "ReaderSpec",
    "TagSpec",
    "NetworkOrigin",
    "RfidNetwork",
    "build_geometric",
    "build_explicit",
]


class Point2D(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class ReaderSpec:
    """A reader; position and radius are present only for geometric networks."""

    id: int
    position: Point2D | None = None
    radius: float | None = None


@dataclass(frozen=True)
class TagSpec:
    id: int
    position: Point2D | None = None


class NetworkOrigin(enum.Enum):
    GEOMETRIC = "geometric"
    EXPLICIT = "explicit"


def _check_dense_ids(kind: str, ids: Sequence[int]) -> None:
    seen = set(ids)
    if len(seen) != len(ids):
        raise ValueError(f"duplicate {kind} ids")
    if seen and (min(seen) != 0 or max(seen) != len(seen) - 1):
        raise ValueError(f"{kind} ids must be dense 0..{len(seen) - 1}")


class RfidNetwork:
    """Immutable network; construct via build_geometric or build_explicit."""

    __slots__ = (
        "readers",
        "tags",
        "origin",
        "header_comments",
        "_coverage",
        "_tag_coverers",
        "_csr",
    )

    def __init__(
        self,
        readers: Sequence[ReaderSpec],
        tags: Sequence[TagSpec],
        coverage: Mapping[int, Iterable[int]],
        origin: NetworkOrigin,
        header_comments: Sequence[str] = (),
    ):
        readers = tuple(sorted(readers, key=lambda r: r.id))
        tags = tuple(sorted(tags, key=lambda t: t.id))
        _check_dense_ids("reader", [r.id for r in readers])
        _check_dense_ids("tag", [t.id for t in tags])
        cov: dict[int, tuple[int, ...]] = {}
        for r in readers:
            entry = tuple(sorted(coverage.get(r.id, ())))
            for t in entry:
                if not 0 <= t < len(tags):
                    raise ValueError(f"coverage of reader {r.id} names unknown tag {t}")
            cov[r.id] = entry
        unknown = set(coverage) - {r.id for r in readers}
        if unknown:
            raise ValueError(f"coverage names unknown readers {sorted(unknown)}")
        self.readers = readers
        self.tags = tags
        self.origin = origin
        self.header_comments = tuple(header_comments)
        self._coverage = MappingProxyType(cov)
        by_tag: list[list[int]] = [[] for _ in tags]
        for i in range(len(readers)):
            for t in cov[i]:
                by_tag[t].append(i)
        self._tag_coverers = tuple(tuple(c) for c in by_tag)
        self._csr = None

    @property
    def reader_count(self) -> int:
        return len(self.readers)

    @property
    def tag_count(self) -> int:
        return len(self.tags)

    @property
    def coverage(self) -> Mapping[int, tuple[int, ...]]:
        return self._coverage

    def coverers(self, tag: int) -> tuple[int, ...]:
        """Readers covering `tag`, ascending."""
        return self._tag_coverers[tag]

    def multiplicity(self, tag: int) -> int:
        return len(self._tag_coverers[tag])

    def type1_tags(self) -> frozenset[int]:
        """Tags covered by exactly one reader."""
        return frozenset(
            t for t in range(self.tag_count) if len(self._tag_coverers[t]) == 1
        )

    def covered_tags(self) -> frozenset[int]:
        return frozenset(
            t for t in range(self.tag_count) if self._tag_coverers[t]
        )

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Coverage in CSR form: (off, adj) reader->tags, (toff, tadj) tag->readers.

        Cached; arrays are shared, callers must not mutate them.
        """
        if self._csr is None:
            m, n = self.reader_count, self.tag_count
            off = np.zeros(m + 1, dtype=np.int64)
            if m:
                np.cumsum([len(self._coverage[i]) for i in range(m)], out=off[1:])
            adj = np.fromiter(
                (t for i in range(m) for t in self._coverage[i]),
                dtype=np.int64,
                count=int(off[m]),
            )
            toff = np.zeros(n + 1, dtype=np.int64)
            if n:
                np.cumsum([len(c) for c in self._tag_coverers], out=toff[1:])
            tadj = np.fromiter(
                (i for c in self._tag_coverers for i in c),
                dtype=np.int64,
                count=int(toff[n]),
            )
            self._csr = (off, adj, toff, tadj)
        return self._csr

    def __repr__(self) -> str:
        return (
            f"RfidNetwork(readers={self.reader_count}, tags={self.tag_count}, "
            f"origin={self.origin.value})"
        )


def _require_finite(kind: str, ident: int, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{kind} {ident} has non-finite coordinate or radius")


def build_geometric(
    readers: Sequence[ReaderSpec],
    tags: Sequence[TagSpec],
    header_comments: Sequence[str] = (),
) -> RfidNetwork:
    """Derive coverage from disk geometry: tag t is covered by reader i iff
    dist(t, i) <= radius(i). Boundary is inclusive.

    Uses a uniform grid bucketed at the largest radius, so each reader only
    inspects its 3x3 cell neighbourhood instead of every tag.
    """
    for r in readers:
        if r.position is None or r.radius is None:
            raise ValueError(f"reader {r.id} lacks position or radius")
        _require_finite("reader", r.id, r.position.x, r.position.y, r.radius)
        if r.radius <= 0:
            raise ValueError(f"reader {r.id} radius must be positive")
    for t in tags:
        if t.position is None:
            raise ValueError(f"tag {t.id} lacks position")
        _require_finite("tag", t.id, t.position.x, t.position.y)

    cell = max((r.radius for r in readers), default=1.0)
    buckets: dict[tuple[int, int], list[int]] = {}
    tag_list = tuple(sorted(tags, key=lambda t: t.id))
    for t in tag_list:
        key = (math.floor(t.position.x / cell), math.floor(t.position.y / cell))
        buckets.setdefault(key, []).append(t.id)

    coverage: dict[int, list[int]] = {}
    for r in readers:
        cx = math.floor(r.position.x / cell)
        cy = math.floor(r.position.y / cell)
        rr = r.radius * r.radius
        hit: list[int] = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for tid in buckets.get((cx + dx, cy + dy), ()):
                    p = tag_list[tid].position
                    ddx = p.x - r.position.x
                    ddy = p.y - r.position.y
                    if ddx * ddx + ddy * ddy <= rr:
                        hit.append(tid)
        coverage[r.id] = hit
    return RfidNetwork(
        readers, tags, coverage, NetworkOrigin.GEOMETRIC, header_comments
    )


def build_explicit(
    reader_count: int,
    tag_count: int,
    relation: Iterable[tuple[int, int]],
    header_comments: Sequence[str] = (),
) -> RfidNetwork:
    """Build a network from an explicit list of (reader, tag) coverage pairs."""
    if reader_count < 0 or tag_count < 0:
        raise ValueError("counts must be non-negative")
    coverage: dict[int, list[int]] = {i: [] for i in range(reader_count)}
    seen: set[tuple[int, int]] = set()
    for pair in relation:
        i, t = pair
        if not 0 <= i < reader_count:
            raise ValueError(f"pair {pair!r} names unknown reader {i}")
        if not 0 <= t < tag_count:
            raise ValueError(f"pair {pair!r} names unknown tag {t}")
        if (i, t) in seen:
            raise ValueError(f"duplicate coverage pair {pair!r}")
        seen.add((i, t))
        coverage[i].append(t)
    readers = [ReaderSpec(i) for i in range(reader_count)]
    tags = [TagSpec(t) for t in range(tag_count)]
    return RfidNetwork(
        readers, tags, coverage, NetworkOrigin.EXPLICIT, header_comments
    )
