"""Writable per-tag state and the ledger that counts write-to-tag operations.

One write operation is one state-changing mutation of a field group on one
tag. Writes that would leave the field group unchanged are suppressed and do
not count. The (holder, tag_count) pair used by count-competition sweeps is a
single field group, so claiming a tag costs one operation, not two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

__all__ = [
    "TagStatus",
    "TagField",
    "TagMemory",
    "WriteLedger",
    "TagArena",
    "StatusTransitionError",
]


class TagStatus(enum.IntEnum):
    NULL = 0
    OVERLAP = 1
    LOCK = 2


class TagField(enum.Enum):
    HOLDER = "holder"
    RRE_HOLDER_COUNT = "rre_holder_count"
    STATUS = "status"
    COVERER_APPEND = "coverer_append"


class StatusTransitionError(RuntimeError):
    """A status write tried to move backwards (status is forward-only)."""


@dataclass
class TagMemory:
    """State of one tag: who holds it, a stored count, a status flag, and the
    list of readers that have announced themselves on it."""

    holder: int | None = None
    tag_count: int = 0
    status: TagStatus = TagStatus.NULL
    coverer_list: list[int] = field(default_factory=list)


class WriteLedger:
    """Counts write operations, total and per acting reader.

    `reset` zeroes the current counters but folds them into a lifetime total,
    so multi-phase runs that wipe tag memory between phases still report a
    cumulative cost.
    """

    __slots__ = ("total", "per_reader", "_carried")

    def __init__(self):
        self.total = 0
        self.per_reader: dict[int, int] = {}
        self._carried = 0

    def record(self, reader: int) -> None:
        self.total += 1
        self.per_reader[reader] = self.per_reader.get(reader, 0) + 1

    def reset(self) -> None:
        self._carried += self.total
        self.total = 0
        self.per_reader = {}

    @property
    def lifetime_total(self) -> int:
        return self._carried + self.total

    def __repr__(self) -> str:
        return f"WriteLedger(total={self.total}, lifetime={self.lifetime_total})"


class TagArena:
    """All tag memories for one run plus the write ledger.

    With trace=True every counted mutation is recorded as
    (reader, tag, field, old, new), so the ledger can be audited by replay.
    """

    def __init__(self, tag_count: int, trace: bool = False):
        if tag_count < 0:
            raise ValueError("tag_count must be non-negative")
        self.tags = [TagMemory() for _ in range(tag_count)]
        self.ledger = WriteLedger()
        self.mutations: list[tuple] | None = [] if trace else None

    def write(self, reader: int, tag: int, fld: TagField, value) -> bool:
        """Apply one write; returns True iff state changed (and was counted)."""
        mem = self.tags[tag]
        if fld is TagField.HOLDER:
            new = int(value)
            old = mem.holder
            changed = old != new
            if changed:
                mem.holder = new
        elif fld is TagField.RRE_HOLDER_COUNT:
            holder, count = value
            old = (mem.holder, mem.tag_count)
            new = (int(holder), int(count))
            changed = old != new
            if changed:
                mem.holder, mem.tag_count = new
        elif fld is TagField.STATUS:
            new = TagStatus(value)
            old = mem.status
            if new < old:
                raise StatusTransitionError(
                    f"tag {tag}: status {old.name} -> {new.name}"
                )
            changed = new != old
            if changed:
                mem.status = new
        elif fld is TagField.COVERER_APPEND:
            new = int(value)
            old = tuple(mem.coverer_list)
            changed = new not in mem.coverer_list
            if changed:
                mem.coverer_list.append(new)
        else:
            raise TypeError(f"unknown field {fld!r}")
        if changed:
            self.ledger.record(reader)
            if self.mutations is not None:
                self.mutations.append((reader, tag, fld, old, new))
        return changed

    def reset(self) -> None:
        """Fresh memories for every tag; ledger counters fold into the
        lifetime total."""
        self.tags = [TagMemory() for _ in range(len(self.tags))]
        self.ledger.reset()
