"""Pure Python detection kernels over the instrumented tag-memory model.

These are the reference semantics. Each kernel takes a network and a full
visiting order and returns five arrays:

    (redundant uint8[M], writes_per_reader int64[M],
     holder int64[N] (-1 = unheld), value int64[N], status uint8[N])

The compiled twins in ``_kernels`` reproduce these arrays exactly; the
equivalence is property-tested. Keep any semantic change mirrored there.
"""

from __future__ import annotations

import numpy as np

from .network import RfidNetwork
from .tagmem import TagArena, TagField, TagStatus

__all__ = ["naive", "rre", "leo", "leo_rre", "oa", "drre"]


def _finish(
    net: RfidNetwork,
    redundant: set[int],
    wpr: dict[int, int],
    arena: TagArena | None,
):
    m, n = net.reader_count, net.tag_count
    red = np.zeros(m, dtype=np.uint8)
    for i in redundant:
        red[i] = 1
    wpr_arr = np.zeros(m, dtype=np.int64)
    for i, c in wpr.items():
        wpr_arr[i] = c
    holder = np.full(n, -1, dtype=np.int64)
    value = np.zeros(n, dtype=np.int64)
    status = np.zeros(n, dtype=np.uint8)
    if arena is not None:
        for t, mem in enumerate(arena.tags):
            if mem.holder is not None:
                holder[t] = mem.holder
            value[t] = mem.tag_count
            status[t] = int(mem.status)
    return red, wpr_arr, holder, value, status


def naive(net: RfidNetwork, order):
    """Query-count detection: a reader is redundant iff every tag it covers
    answers a multiplicity of at least two. Writes nothing; order-independent
    (the order argument is accepted for interface uniformity)."""
    redundant = {
        i
        for i in range(net.reader_count)
        if all(net.multiplicity(t) >= 2 for t in net.coverage[i])
    }
    return _finish(net, redundant, {}, None)


def _rre_sweep(net: RfidNetwork, arena: TagArena, order) -> None:
    # count-competition: a visit claims (holder, count) only on a strictly
    # larger count; ties keep the earlier writer
    for i in order:
        count = len(net.coverage[i])
        for t in net.coverage[i]:
            mem = arena.tags[t]
            if mem.holder is None or mem.tag_count < count:
                arena.write(i, t, TagField.RRE_HOLDER_COUNT, (i, count))


def _unheld(net: RfidNetwork, arena: TagArena, readers) -> set[int]:
    held = {mem.holder for mem in arena.tags if mem.holder is not None}
    return {i for i in readers if i not in held}


def rre(net: RfidNetwork, order):
    """Count-competition sweep. Each reader visits its tags once, in the given
    order, writing (itself, |covered tags|) wherever the stored count is
    strictly smaller. Redundant = readers holding nothing after all visits."""
    arena = TagArena(net.tag_count)
    _rre_sweep(net, arena, order)
    redundant = _unheld(net, arena, order)
    return _finish(net, redundant, arena.ledger.per_reader, arena)


def _leo_sweep(net: RfidNetwork, arena: TagArena, order) -> set[int]:
    # first-come-first-hold; a reader that claims nothing during its own
    # visit is redundant immediately
    off: set[int] = set()
    for i in order:
        claimed = False
        for t in net.coverage[i]:
            if arena.tags[t].holder is None:
                arena.write(i, t, TagField.HOLDER, i)
                claimed = True
        if not claimed:
            off.add(i)
    return off


def leo(net: RfidNetwork, order):
    """First-come-first-hold sweep. A reader writes itself as holder of every
    still-unheld tag it covers; it is redundant iff that visit wrote nothing."""
    arena = TagArena(net.tag_count)
    redundant = _leo_sweep(net, arena, order)
    return _finish(net, redundant, arena.ledger.per_reader, arena)


def leo_rre(net: RfidNetwork, order):
    """Two-phase hybrid: the first-come sweep runs first and its detections
    are switched off, tag memory is wiped, then the count-competition sweep
    runs over the survivors in the same relative order. Detections are the
    union of both phases; write cost is cumulative across phases."""
    arena = TagArena(net.tag_count)
    off = _leo_sweep(net, arena, order)
    phase1 = dict(arena.ledger.per_reader)
    arena.reset()
    survivors = [i for i in order if i not in off]
    _rre_sweep(net, arena, survivors)
    redundant = off | _unheld(net, arena, survivors)
    wpr = dict(phase1)
    for i, c in arena.ledger.per_reader.items():
        wpr[i] = wpr.get(i, 0) + c
    assert arena.ledger.lifetime_total == sum(wpr.values())
    return _finish(net, redundant, wpr, arena)


def oa(net: RfidNetwork, order):
    """Claim/mark/lock detection in three global write rounds plus a decision
    round. Round 1: claim every unheld covered tag. Round 2: mark tags held
    by someone else as Overlap. Round 3: escalate marked tags held by someone
    else to Lock. Decision: a reader stays on iff it still holds some tag
    whose status is not Lock. The outcome is order-independent."""
    arena = TagArena(net.tag_count)
    for i in order:
        for t in net.coverage[i]:
            if arena.tags[t].holder is None:
                arena.write(i, t, TagField.HOLDER, i)
    for i in order:
        for t in net.coverage[i]:
            mem = arena.tags[t]
            if mem.holder != i and mem.status is TagStatus.NULL:
                arena.write(i, t, TagField.STATUS, TagStatus.OVERLAP)
    for i in order:
        for t in net.coverage[i]:
            mem = arena.tags[t]
            if mem.holder != i and mem.status is not TagStatus.NULL:
                arena.write(i, t, TagField.STATUS, TagStatus.LOCK)
    redundant = {
        i
        for i in range(net.reader_count)
        if not any(
            arena.tags[t].holder == i and arena.tags[t].status is not TagStatus.LOCK
            for t in net.coverage[i]
        )
    }
    return _finish(net, redundant, arena.ledger.per_reader, arena)


def drre(net: RfidNetwork, order):
    """Neighbourhood-count competition. Phase 1: every reader appends itself
    to the coverer list of each tag it covers. Each reader then counts the
    distinct other readers appearing on its tags (its neighbour degree).
    Phase 2: a count-competition sweep in the same order, competing on
    neighbour degree instead of coverage size."""
    arena = TagArena(net.tag_count)
    for i in order:
        for t in net.coverage[i]:
            arena.write(i, t, TagField.COVERER_APPEND, i)
    nd: dict[int, int] = {}
    for i in range(net.reader_count):
        neighbours: set[int] = set()
        for t in net.coverage[i]:
            neighbours.update(arena.tags[t].coverer_list)
        neighbours.discard(i)
        nd[i] = len(neighbours)
    for i in order:
        count = nd[i]
        for t in net.coverage[i]:
            mem = arena.tags[t]
            if mem.holder is None or mem.tag_count < count:
                arena.write(i, t, TagField.RRE_HOLDER_COUNT, (i, count))
    redundant = _unheld(net, arena, order)
    return _finish(net, redundant, arena.ledger.per_reader, arena)
