"""Compiled detection kernels.

Array-for-array equivalents of the reference implementations in ``_pure``:
same inputs (coverage in CSR form plus a visiting order), same five output
arrays, bit-identical values. The pure module documents the semantics; keep
the two in lockstep.

CSR layout: reader i covers adj[off[i]:off[i+1]]; tag t is covered by
tadj[toff[t]:toff[t+1]]. Both adjacency slices are ascending.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8


cdef inline void _mark_held(i64[::1] holder, u8[::1] red, Py_ssize_t m, Py_ssize_t n):
    # redundant = readers holding nothing
    cdef Py_ssize_t i, t
    for i in range(m):
        red[i] = 1
    for t in range(n):
        if holder[t] >= 0:
            red[holder[t]] = 0


def naive(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.zeros(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] red = red_np
    cdef Py_ssize_t i, e
    cdef i64 t
    cdef int all_multi
    for i in range(m):
        all_multi = 1
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if toff[t + 1] - toff[t] < 2:
                all_multi = 0
                break
        red[i] = all_multi
    return red_np, wpr_np, holder_np, value_np, status_np


cdef void _rre_pass(
    i64[::1] off,
    i64[::1] adj,
    i64[::1] order,
    i64[::1] counts,
    i64[::1] holder,
    i64[::1] value,
    i64[::1] wpr,
):
    # claim (holder, count) where the stored count is strictly smaller;
    # ties keep the earlier writer
    cdef Py_ssize_t k, e
    cdef i64 i, t, c
    for k in range(order.shape[0]):
        i = order[k]
        c = counts[i]
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] < 0 or value[t] < c:
                holder[t] = i
                value[t] = c
                wpr[i] += 1


def rre(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.empty(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    counts_np = np.empty(m, dtype=np.int64)
    cdef i64[::1] counts = counts_np
    cdef i64[::1] holder = holder_np
    cdef Py_ssize_t i
    for i in range(m):
        counts[i] = off[i + 1] - off[i]
    _rre_pass(off, adj, order, counts, holder, value_np, wpr_np)
    _mark_held(holder, red_np, m, n)
    return red_np, wpr_np, holder_np, value_np, status_np


cdef void _leo_pass(
    i64[::1] off,
    i64[::1] adj,
    i64[::1] order,
    i64[::1] holder,
    i64[::1] wpr,
    u8[::1] red,
):
    # first-come-first-hold; a visit that claims nothing switches the
    # reader off on the spot
    cdef Py_ssize_t k, e
    cdef i64 i, t
    cdef int claimed
    for k in range(order.shape[0]):
        i = order[k]
        claimed = 0
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] < 0:
                holder[t] = i
                wpr[i] += 1
                claimed = 1
        if not claimed:
            red[i] = 1


def leo(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.zeros(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    _leo_pass(off, adj, order, holder_np, wpr_np, red_np)
    return red_np, wpr_np, holder_np, value_np, status_np


def leo_rre(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.zeros(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] red = red_np
    cdef i64[::1] holder = holder_np
    cdef i64[::1] value = value_np
    _leo_pass(off, adj, order, holder, wpr_np, red)

    # wipe tag memory, keep cumulative write counts, rerun the
    # count-competition sweep over the survivors in relative order
    cdef Py_ssize_t k, nsurv = 0
    for k in range(order.shape[0]):
        if not red[order[k]]:
            nsurv += 1
    surv_np = np.empty(nsurv, dtype=np.int64)
    cdef i64[::1] surv = surv_np
    nsurv = 0
    for k in range(order.shape[0]):
        if not red[order[k]]:
            surv[nsurv] = order[k]
            nsurv += 1
    holder[:] = -1
    value[:] = 0
    counts_np = np.empty(m, dtype=np.int64)
    cdef i64[::1] counts = counts_np
    cdef Py_ssize_t i
    for i in range(m):
        counts[i] = off[i + 1] - off[i]
    _rre_pass(off, adj, surv_np, counts, holder, value, wpr_np)

    cdef Py_ssize_t t
    held_np = np.zeros(m, dtype=np.uint8)
    cdef u8[::1] held = held_np
    for t in range(n):
        if holder[t] >= 0:
            held[holder[t]] = 1
    for k in range(surv.shape[0]):
        if not held[surv[k]]:
            red[surv[k]] = 1
    return red_np, wpr_np, holder_np, value_np, status_np


def oa(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.zeros(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    cdef u8[::1] red = red_np
    cdef i64[::1] wpr = wpr_np
    cdef i64[::1] holder = holder_np
    cdef u8[::1] status = status_np
    cdef Py_ssize_t k, e
    cdef i64 i, t
    cdef int keeps
    # round 1: claim every unheld covered tag
    for k in range(order.shape[0]):
        i = order[k]
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] < 0:
                holder[t] = i
                wpr[i] += 1
    # round 2: mark foreign-held tags as Overlap
    for k in range(order.shape[0]):
        i = order[k]
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] != i and status[t] == 0:
                status[t] = 1
                wpr[i] += 1
    # round 3: escalate marked foreign-held tags to Lock
    for k in range(order.shape[0]):
        i = order[k]
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] != i and status[t] != 0:
                if status[t] != 2:
                    status[t] = 2
                    wpr[i] += 1
    # decision: stay on iff some held tag is not locked
    for i in range(m):
        keeps = 0
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            if holder[t] == i and status[t] != 2:
                keeps = 1
                break
        red[i] = not keeps
    return red_np, wpr_np, holder_np, value_np, status_np


def drre(i64[::1] off, i64[::1] adj, i64[::1] toff, i64[::1] tadj, i64[::1] order):
    cdef Py_ssize_t m = off.shape[0] - 1
    cdef Py_ssize_t n = toff.shape[0] - 1
    red_np = np.empty(m, dtype=np.uint8)
    wpr_np = np.zeros(m, dtype=np.int64)
    holder_np = np.full(n, -1, dtype=np.int64)
    value_np = np.zeros(n, dtype=np.int64)
    status_np = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] wpr = wpr_np
    cdef i64[::1] holder = holder_np
    cdef Py_ssize_t k, e, f
    cdef i64 i, t, other
    # phase 1: each visit appends the reader to the tag's coverer list;
    # every append is a counted write
    for k in range(order.shape[0]):
        i = order[k]
        wpr[i] += off[i + 1] - off[i]
    # neighbour degree: distinct other readers sharing at least one tag
    nd_np = np.zeros(m, dtype=np.int64)
    stamp_np = np.zeros(m, dtype=np.int64)
    cdef i64[::1] nd = nd_np
    cdef i64[::1] stamp = stamp_np
    for i in range(m):
        for e in range(off[i], off[i + 1]):
            t = adj[e]
            for f in range(toff[t], toff[t + 1]):
                other = tadj[f]
                if other != i and stamp[other] != i + 1:
                    stamp[other] = i + 1
                    nd[i] += 1
    # phase 2: count-competition on neighbour degree
    _rre_pass(off, adj, order, nd_np, holder, value_np, wpr_np)
    _mark_held(holder, red_np, m, n)
    return red_np, wpr_np, holder_np, value_np, status_np
