"""Inner loops: pruned backtracking search and exhaustive enumeration.

Both kernels take the graph as open-neighbourhood CSR arrays ``(indptr,
indices)`` plus a ``constrained`` mask marking vertices whose closed
neighbourhood must be rainbow. Colours are ``1..k``; 0 means uncoloured.
The two kernels share no helpers so the enumeration stays an independent
check of the search.
"""
import numpy as np

from ._accel import njit


@njit
def _assign(v, c, colour, indptr, indices, cnt, missing, uncol):
    colour[v] = c
    uncol[v] -= 1
    if cnt[v, c] == 0:
        missing[v] -= 1
    cnt[v, c] += 1
    for p in range(indptr[v], indptr[v + 1]):
        w = indices[p]
        uncol[w] -= 1
        if cnt[w, c] == 0:
            missing[w] -= 1
        cnt[w, c] += 1


@njit
def _unassign(v, colour, indptr, indices, cnt, missing, uncol):
    c = colour[v]
    colour[v] = 0
    uncol[v] += 1
    cnt[v, c] -= 1
    if cnt[v, c] == 0:
        missing[v] += 1
    for p in range(indptr[v], indptr[v + 1]):
        w = indices[p]
        uncol[w] += 1
        cnt[w, c] -= 1
        if cnt[w, c] == 0:
            missing[w] += 1


@njit
def _completable(v, constrained, indptr, indices, missing, uncol):
    # every constrained closed neighbourhood touching v can still become rainbow
    if constrained[v] and missing[v] > uncol[v]:
        return False
    for p in range(indptr[v], indptr[v + 1]):
        w = indices[p]
        if constrained[w] and missing[w] > uncol[w]:
            return False
    return True


@njit
def search_kernel(n, k, order, indptr, indices, constrained):
    """Depth-first search for a proper surjective rainbow ``k``-colouring.

    Vertices are coloured in ``order``; colours are tried in ascending order
    and the first use of each colour along ``order`` is forced to be 1, 2, ...
    Returns ``(found, colour)`` where ``colour`` is the first solution met.
    """
    colour = np.zeros(n, dtype=np.int64)
    if n == 0 or k < 1 or k > n:
        return False, colour
    for v in range(n):
        if constrained[v] and indptr[v + 1] - indptr[v] + 1 < k:
            return False, colour

    cnt = np.zeros((n, k + 1), dtype=np.int64)
    missing = np.full(n, k, dtype=np.int64)
    uncol = np.empty(n, dtype=np.int64)
    for v in range(n):
        uncol[v] = indptr[v + 1] - indptr[v] + 1
    nxt = np.ones(n, dtype=np.int64)
    maxused = np.zeros(n + 1, dtype=np.int64)

    d = 0
    while d >= 0:
        v = order[d]
        if colour[v] != 0:
            _unassign(v, colour, indptr, indices, cnt, missing, uncol)
        base = maxused[d]
        limit = min(base + 1, k)
        remaining = n - d - 1
        c = nxt[d]
        placed = False
        while c <= limit:
            if k - max(base, c) <= remaining:
                clash = False
                for p in range(indptr[v], indptr[v + 1]):
                    if colour[indices[p]] == c:
                        clash = True
                        break
                if not clash:
                    _assign(v, c, colour, indptr, indices, cnt, missing, uncol)
                    if _completable(v, constrained, indptr, indices, missing, uncol):
                        placed = True
                        break
                    _unassign(v, colour, indptr, indices, cnt, missing, uncol)
            c += 1
        if not placed:
            nxt[d] = 1
            d -= 1
            continue
        nxt[d] = c + 1
        maxused[d + 1] = max(base, c)
        if d == n - 1:
            return True, colour
        d += 1
        nxt[d] = 1
    return False, colour


@njit
def enumerate_kernel(n, k, indptr, indices, constrained, start, stop):
    """Scan assignments ``start..stop-1`` of the lexicographic order on ``k^n``.

    Vertex 0 is the most significant digit. Returns the index of the first
    proper, surjective assignment whose constrained vertices are all rainbow,
    or -1.
    """
    colour = np.empty(n, dtype=np.int64)
    rest = start
    for j in range(n - 1, -1, -1):
        colour[j] = rest % k + 1
        rest //= k
    seen = np.zeros(k + 1, dtype=np.int64)
    stamp = 0
    idx = start
    while idx < stop:
        ok = True
        for v in range(n):
            for p in range(indptr[v], indptr[v + 1]):
                if colour[indices[p]] == colour[v]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            stamp += 1
            for v in range(n):
                seen[colour[v]] = stamp
            for c in range(1, k + 1):
                if seen[c] != stamp:
                    ok = False
                    break
        if ok:
            for v in range(n):
                if not constrained[v]:
                    continue
                stamp += 1
                seen[colour[v]] = stamp
                for p in range(indptr[v], indptr[v + 1]):
                    seen[colour[indices[p]]] = stamp
                for c in range(1, k + 1):
                    if seen[c] != stamp:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            return idx
        # odometer step
        j = n - 1
        while j >= 0:
            if colour[j] < k:
                colour[j] += 1
                break
            colour[j] = 1
            j -= 1
        idx += 1
    return -1


def enumerate_numpy(n, k, indptr, indices, constrained, start, stop, chunk=1 << 16):
    """Vectorised counterpart of :func:`enumerate_kernel` for the fallback path."""
    if n == 0:
        return -1
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keep = indices > np.repeat(np.arange(n), np.diff(indptr))
    src = np.repeat(np.arange(n), np.diff(indptr))[keep]
    dst = np.asarray(indices)[keep]
    closed = [np.concatenate(([v], indices[indptr[v]:indptr[v + 1]])) for v in range(n) if constrained[v]]
    bits = np.int64(1) << np.arange(k + 1, dtype=np.int64)
    full = int(bits[1:].sum())
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        col = (idx[:, None] // powers) % k + 1
        # cheapest filter first, then work only on surviving rows
        ok = np.all(col[:, src] != col[:, dst], axis=1)
        idx, col = idx[ok], col[ok]
        if not idx.size:
            continue
        masks = bits[col]
        ok = np.bitwise_or.reduce(masks, axis=1) == full
        for nb in closed:
            ok &= np.bitwise_or.reduce(masks[:, nb], axis=1) == full
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(idx[hits[0]])
    return -1


def decode_assignment(index, n, k):
    """Colour vector of the ``index``-th assignment in lexicographic order."""
    out = np.empty(n, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        out[j] = index % k + 1
        index //= k
    return out
