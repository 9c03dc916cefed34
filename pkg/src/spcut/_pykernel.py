"""Pure-Python reduction kernel; reference for the compiled ``_ckernel``.

All three functions index arrays by step ``j`` (``0..n-1``); entries 0 and 1
are unused. Closures are keyed by ``min*n + max`` of their endpoint pair.
"""

from .errors import BadLabeling


def reduce_series(n, eu, ev, ew, order, wit0, wit1, maximize):
    """Phase I: contract one closure at every labeled vertex, from ``n-1`` down to 2.

    Returns ``(into_u0, w0, w1, fresh, base)``: whether ``v_j`` merged into its
    first witness neighbor, the two closure weights seen at step ``j``, whether
    the surviving pair had no closure before the merge, and the weight of the
    last closure.
    """
    weight = {}
    deg = [0] * n
    for u, v, w in zip(eu, ev, ew):
        k = u * n + v if u < v else v * n + u
        if k in weight:
            weight[k] += w
        else:
            weight[k] = w
            deg[u] += 1
            deg[v] += 1

    into_u0 = [False] * n
    w0 = [0] * n
    w1 = [0] * n
    fresh = [False] * n
    for j in range(n - 1, 1, -1):
        v = order[j]
        a = wit0[j]
        b = wit1[j]
        k0 = a * n + v if a < v else v * n + a
        k1 = b * n + v if b < v else v * n + b
        if deg[v] != 2 or a == b or k0 not in weight or k1 not in weight:
            raise BadLabeling(j, v)
        p0 = weight.pop(k0)
        p1 = weight.pop(k1)
        w0[j] = p0
        w1[j] = p1
        # ties contract P0 under both objectives
        keep0 = not (p0 > p1) if maximize else not (p0 < p1)
        moved = p1 if keep0 else p0
        into_u0[j] = keep0
        deg[v] = 0
        kab = a * n + b if a < b else b * n + a
        if kab in weight:
            weight[kab] += moved
            deg[a] -= 1
            deg[b] -= 1
        else:
            weight[kab] = moved
            fresh[j] = True
    a = order[0]
    b = order[1]
    kab = a * n + b if a < b else b * n + a
    if deg[a] != 1 or deg[b] != 1 or kab not in weight:
        raise BadLabeling(1, b, "final two vertices are not joined by one closure")
    return into_u0, w0, w1, fresh, weight[kab]


def guard_candidates(n, order, wit0, wit1, fresh):
    """Forward replay from the base closure, tracking which closures are bridges.

    ``G_j - v_j`` is connected iff the neighbor pair kept an older closure at
    step ``j`` or the closure it became in ``G_{j-1}`` is not a bridge.
    """
    valid = [False] * n
    a = order[0]
    b = order[1]
    bridge = {(a * n + b if a < b else b * n + a): True}
    for j in range(2, n):
        v = order[j]
        a = wit0[j]
        b = wit1[j]
        kab = a * n + b if a < b else b * n + a
        if fresh[j]:
            status = bridge.pop(kab)
            valid[j] = not status
        else:
            bridge[kab] = False
            status = False
            valid[j] = True
        bridge[a * n + v if a < v else v * n + a] = status
        bridge[b * n + v if b < v else v * n + b] = status
    return valid


def scan_candidates(n, w0, w1, valid, base, maximize, guarded):
    """Phase II: the base closure first, then steps 2..n-1, replacing only on strict improvement.

    Returns ``(best_step, best_weight)``; step 1 denotes the base closure.
    """
    best = base
    best_j = 1
    for j in range(2, n):
        if guarded and not valid[j]:
            continue
        c = w0[j] + w1[j]
        if (c > best) if maximize else (c < best):
            best = c
            best_j = j
    return best_j, best
