# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c
"""Compiled reduction kernel; mirrors ``spcut._pykernel`` on int64 weights.

Closures live in a flat open-addressing table keyed by ``min*n + max``.
At most ``m + n`` keys are ever inserted, so a capacity of at least twice
that keeps probes short even with tombstones.
"""

import numpy as np
cimport numpy as cnp

from .errors import BadLabeling

ctypedef long long i64
ctypedef unsigned long long u64

cdef extern from *:
    void __builtin_prefetch(const void* addr) nogil

cdef i64 EMPTY = -1
cdef i64 TOMB = -2
# steps of look-ahead for prefetching table slots; the loop is latency bound
cdef Py_ssize_t AHEAD = 8


cdef inline i64 _key(i64 a, i64 b, i64 n) noexcept nogil:
    return a * n + b if a < b else b * n + a


cdef inline Py_ssize_t _slot(i64 key, u64 mask) noexcept nogil:
    cdef u64 h = <u64>key
    h ^= h >> 33
    h *= 0xff51afd7ed558ccdULL
    h ^= h >> 33
    return <Py_ssize_t>(h & mask)


cdef struct Slot:
    i64 key
    i64 val


cdef struct Table:
    Slot* slots
    u64 mask


cdef inline void _touch(Table* t, i64 key) noexcept nogil:
    __builtin_prefetch(&t.slots[_slot(key, t.mask)])


cdef Py_ssize_t _find(Table* t, i64 key) noexcept nogil:
    """Slot holding ``key`` or -1."""
    cdef Py_ssize_t s = _slot(key, t.mask)
    while t.slots[s].key != EMPTY:
        if t.slots[s].key == key:
            return s
        s = (s + 1) & t.mask
    return -1


cdef void _insert(Table* t, i64 key, i64 val) noexcept nogil:
    """Insert a key known to be absent."""
    cdef Py_ssize_t s = _slot(key, t.mask)
    while t.slots[s].key >= 0:
        s = (s + 1) & t.mask
    t.slots[s].key = key
    t.slots[s].val = val


def _capacity(i64 items):
    cap = 16
    while cap < 2 * items + 16:
        cap *= 2
    return cap


def reduce_series(i64 n, const i64[::1] eu, const i64[::1] ev, const i64[::1] ew,
                  const i64[::1] order, const i64[::1] wit0, const i64[::1] wit1,
                  bint maximize):
    cdef Py_ssize_t m = eu.shape[0]
    cap = _capacity(m + n)
    store = np.full(2 * cap, EMPTY, dtype=np.int64)
    cdef i64[::1] raw = store
    cdef Table t
    t.slots = <Slot*>&raw[0]
    t.mask = <u64>(cap - 1)

    deg_arr = np.zeros(n, dtype=np.int64)
    into_u0_arr = np.zeros(n, dtype=np.uint8)
    w0_arr = np.zeros(n, dtype=np.int64)
    w1_arr = np.zeros(n, dtype=np.int64)
    fresh_arr = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] deg = deg_arr
    cdef unsigned char[::1] into_u0 = into_u0_arr
    cdef unsigned char[::1] fresh = fresh_arr
    cdef i64[::1] w0 = w0_arr
    cdef i64[::1] w1 = w1_arr
    cdef Py_ssize_t i, s0, s1, s
    cdef i64 u, v, a, b, k, p0, p1, moved, j
    cdef bint keep0, bad = False

    with nogil:
        for i in range(m):
            if i + AHEAD < m:
                _touch(&t, _key(eu[i + AHEAD], ev[i + AHEAD], n))
            u = eu[i]
            v = ev[i]
            k = _key(u, v, n)
            s = _find(&t, k)
            if s >= 0:
                t.slots[s].val += ew[i]
            else:
                _insert(&t, k, ew[i])
                deg[u] += 1
                deg[v] += 1

        j = n - 1
        while j > 1:
            if j - AHEAD > 1:
                k = j - AHEAD
                _touch(&t, _key(wit0[k], order[k], n))
                _touch(&t, _key(wit1[k], order[k], n))
                _touch(&t, _key(wit0[k], wit1[k], n))
                __builtin_prefetch(&deg[wit0[k]])
                __builtin_prefetch(&deg[wit1[k]])
            v = order[j]
            a = wit0[j]
            b = wit1[j]
            s0 = _find(&t, _key(a, v, n))
            s1 = _find(&t, _key(b, v, n))
            if deg[v] != 2 or a == b or s0 < 0 or s1 < 0:
                bad = True
                break
            p0 = t.slots[s0].val
            p1 = t.slots[s1].val
            t.slots[s0].key = TOMB
            t.slots[s1].key = TOMB
            w0[j] = p0
            w1[j] = p1
            # ties contract P0 under both objectives
            if maximize:
                keep0 = not (p0 > p1)
            else:
                keep0 = not (p0 < p1)
            moved = p1 if keep0 else p0
            into_u0[j] = keep0
            deg[v] = 0
            k = _key(a, b, n)
            s = _find(&t, k)
            if s >= 0:
                t.slots[s].val += moved
                deg[a] -= 1
                deg[b] -= 1
            else:
                _insert(&t, k, moved)
                fresh[j] = 1
            j -= 1

    if bad:
        raise BadLabeling(j, order[j])
    a = order[0]
    b = order[1]
    s = _find(&t, _key(a, b, n))
    if deg[a] != 1 or deg[b] != 1 or s < 0:
        raise BadLabeling(1, b, "final two vertices are not joined by one closure")
    return (into_u0_arr.view(np.bool_), w0_arr, w1_arr, fresh_arr.view(np.bool_),
            int(t.slots[s].val))


def guard_candidates(i64 n, const i64[::1] order, const i64[::1] wit0,
                     const i64[::1] wit1, const cnp.npy_bool[::1] fresh):
    cap = _capacity(3 * n)
    store = np.full(2 * cap, EMPTY, dtype=np.int64)
    cdef i64[::1] raw = store
    cdef Table t
    t.slots = <Slot*>&raw[0]
    t.mask = <u64>(cap - 1)
    valid_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] valid = valid_arr
    cdef i64 j, v, a, b, k, status
    cdef Py_ssize_t s

    with nogil:
        _insert(&t, _key(order[0], order[1], n), 1)
        for j in range(2, n):
            v = order[j]
            a = wit0[j]
            b = wit1[j]
            k = _key(a, b, n)
            s = _find(&t, k)
            if fresh[j]:
                status = t.slots[s].val
                t.slots[s].key = TOMB
                valid[j] = not status
            else:
                status = 0
                if s >= 0:
                    t.slots[s].val = 0
                else:
                    _insert(&t, k, 0)
                valid[j] = 1
            _insert(&t, _key(a, v, n), status)
            _insert(&t, _key(b, v, n), status)
    return valid_arr.view(np.bool_)


def scan_candidates(i64 n, const i64[::1] w0, const i64[::1] w1,
                    const cnp.npy_bool[::1] valid, i64 base, bint maximize, bint guarded):
    cdef i64 best = base, c, j, best_j = 1
    with nogil:
        for j in range(2, n):
            if guarded and not valid[j]:
                continue
            c = w0[j] + w1[j]
            if (c > best) if maximize else (c < best):
                best = c
                best_j = j
    return best_j, best
