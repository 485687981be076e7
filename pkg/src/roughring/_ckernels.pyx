# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``; inputs are int64 buffers."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef void _approx_all(const i64[:] maps, Py_ssize_t nmaps, Py_ssize_t nsrc,
                      Py_ssize_t nsub, i64* lower, i64* upper) noexcept nogil:
    cdef Py_ssize_t m, a, x
    cdef i64 lo, up, img
    for m in range(nmaps):
        for a in range(nsub):
            lo = 0
            up = 0
            for x in range(nsrc):
                img = maps[m * nsrc + x]
                if img & ~a == 0:
                    lo |= (<i64>1) << x
                if img & a:
                    up |= (<i64>1) << x
            lower[m * nsub + a] = lo
            upper[m * nsub + a] = up


cdef inline i64 _lo(i64* images, Py_ssize_t nsrc, i64 a) noexcept nogil:
    cdef i64 r = 0
    cdef Py_ssize_t x
    for x in range(nsrc):
        if images[x] & ~a == 0:
            r |= (<i64>1) << x
    return r


cdef inline i64 _up(i64* images, Py_ssize_t nsrc, i64 a) noexcept nogil:
    cdef i64 r = 0
    cdef Py_ssize_t x
    for x in range(nsrc):
        if images[x] & a:
            r |= (<i64>1) << x
    return r


def approx_tables(const i64[:] maps, Py_ssize_t nmaps, Py_ssize_t nsrc, Py_ssize_t nsub):
    cdef i64* lower = <i64*>malloc(nmaps * nsub * sizeof(i64))
    cdef i64* upper = <i64*>malloc(nmaps * nsub * sizeof(i64))
    if lower == NULL or upper == NULL:
        free(lower)
        free(upper)
        raise MemoryError()
    try:
        _approx_all(maps, nmaps, nsrc, nsub, lower, upper)
        return ([lower[i] for i in range(nmaps * nsub)],
                [upper[i] for i in range(nmaps * nsub)])
    finally:
        free(lower)
        free(upper)


def scan_single(const i64[:] maps, Py_ssize_t nmaps, Py_ssize_t nsrc, Py_ssize_t nsub, int law):
    cdef i64* lower = <i64*>malloc(nmaps * nsub * sizeof(i64))
    cdef i64* upper = <i64*>malloc(nmaps * nsub * sizeof(i64))
    cdef Py_ssize_t m, a, b, base
    cdef i64 left, right, instances = 0
    # first (m, a, b) per kind; -1 = not found
    cdef i64 wd[3]
    cdef i64 ws[3]
    cdef i64 wp[3]
    cdef bint hd = 0, hs = 0, hp = 0
    if lower == NULL or upper == NULL:
        free(lower)
        free(upper)
        raise MemoryError()
    try:
        with nogil:
            _approx_all(maps, nmaps, nsrc, nsub, lower, upper)
            for m in range(nmaps):
                base = m * nsub
                if law == 1:
                    instances += 1
                    left = upper[base]
                    right = 0
                    if not hd and left != right:
                        hd = 1; wd[0] = m; wd[1] = 0; wd[2] = 0
                    if not hs and left & ~right:
                        hs = 1; ws[0] = m; ws[1] = 0; ws[2] = 0
                    if not hp and right & ~left:
                        hp = 1; wp[0] = m; wp[1] = 0; wp[2] = 0
                    continue
                for a in range(nsub):
                    for b in range(nsub):
                        if law == 0:
                            left = lower[base + (a & b)]
                            right = lower[base + a] & lower[base + b]
                        elif law == 2:
                            left = upper[base + (a | b)]
                            right = upper[base + a] | upper[base + b]
                        elif law == 3:
                            left = lower[base + a] | lower[base + b]
                            right = lower[base + (a | b)]
                        else:
                            left = upper[base + (a & b)]
                            right = upper[base + a] & upper[base + b]
                        if not hd and left != right:
                            hd = 1; wd[0] = m; wd[1] = a; wd[2] = b
                        if not hs and left & ~right:
                            hs = 1; ws[0] = m; ws[1] = a; ws[2] = b
                        if not hp and right & ~left:
                            hp = 1; wp[0] = m; wp[1] = a; wp[2] = b
                instances += nsub * nsub
    finally:
        free(lower)
        free(upper)
    return (instances,
            (wd[0], wd[1], wd[2]) if hd else None,
            (ws[0], ws[1], ws[2]) if hs else None,
            (wp[0], wp[1], wp[2]) if hp else None)


def scan_pair(const i64[:] maps, Py_ssize_t nmaps, Py_ssize_t nsrc, Py_ssize_t nsub,
              int law, bint require_meet):
    cdef i64* lower = <i64*>malloc(nmaps * nsub * sizeof(i64))
    cdef i64* upper = <i64*>malloc(nmaps * nsub * sizeof(i64))
    cdef i64* join = <i64*>malloc((nsrc + 1) * sizeof(i64))
    cdef i64* meet = <i64*>malloc((nsrc + 1) * sizeof(i64))
    cdef Py_ssize_t m1, m2, a, x
    cdef i64 left, right, instances = 0
    cdef bint ok
    cdef i64 wd[3]
    cdef i64 ws[3]
    cdef i64 wp[3]
    cdef bint hd = 0, hs = 0, hp = 0
    if lower == NULL or upper == NULL or join == NULL or meet == NULL:
        free(lower)
        free(upper)
        free(join)
        free(meet)
        raise MemoryError()
    try:
        with nogil:
            _approx_all(maps, nmaps, nsrc, nsub, lower, upper)
            for m1 in range(nmaps):
                for m2 in range(nmaps):
                    ok = 1
                    for x in range(nsrc):
                        join[x] = maps[m1 * nsrc + x] | maps[m2 * nsrc + x]
                        meet[x] = maps[m1 * nsrc + x] & maps[m2 * nsrc + x]
                        if meet[x] == 0:
                            ok = 0
                    if require_meet and not ok:
                        continue
                    for a in range(nsub):
                        if law == 0:
                            left = _up(join, nsrc, a)
                            right = upper[m1 * nsub + a] | upper[m2 * nsub + a]
                        elif law == 1:
                            left = _up(meet, nsrc, a)
                            right = upper[m1 * nsub + a] & upper[m2 * nsub + a]
                        elif law == 2:
                            left = _lo(join, nsrc, a)
                            right = lower[m1 * nsub + a] & lower[m2 * nsub + a]
                        else:
                            left = lower[m1 * nsub + a] | lower[m2 * nsub + a]
                            right = _lo(meet, nsrc, a)
                        if not hd and left != right:
                            hd = 1; wd[0] = m1; wd[1] = m2; wd[2] = a
                        if not hs and left & ~right:
                            hs = 1; ws[0] = m1; ws[1] = m2; ws[2] = a
                        if not hp and right & ~left:
                            hp = 1; wp[0] = m1; wp[1] = m2; wp[2] = a
                    instances += nsub
    finally:
        free(lower)
        free(upper)
        free(join)
        free(meet)
    return (instances,
            (wd[0], wd[1], wd[2]) if hd else None,
            (ws[0], ws[1], ws[2]) if hs else None,
            (wp[0], wp[1], wp[2]) if hp else None)


def ring_violation(const i64[:] add, const i64[:] mul, Py_ssize_t n, i64 zero):
    cdef Py_ssize_t a, b, c
    cdef i64 ab
    cdef bint found
    for a in range(n):
        for b in range(n):
            if add[a * n + b] != add[b * n + a]:
                return 1, a, b, 0
    for a in range(n):
        if add[zero * n + a] != a:
            return 2, a, 0, 0
    for a in range(n):
        found = 0
        for b in range(n):
            if add[a * n + b] == zero:
                found = 1
                break
        if not found:
            return 3, a, 0, 0
    for a in range(n):
        for b in range(n):
            ab = add[a * n + b]
            for c in range(n):
                if add[ab * n + c] != add[a * n + add[b * n + c]]:
                    return 4, a, b, c
    for a in range(n):
        for b in range(n):
            ab = mul[a * n + b]
            for c in range(n):
                if mul[ab * n + c] != mul[a * n + mul[b * n + c]]:
                    return 5, a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a * n + add[b * n + c]] != add[mul[a * n + b] * n + mul[a * n + c]]:
                    return 6, a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[add[a * n + b] * n + c] != add[mul[a * n + c] * n + mul[b * n + c]]:
                    return 7, a, b, c
    return None


def congruence_violation(const i64[:] add, const i64[:] mul, Py_ssize_t n, const i64[:] block_of):
    cdef Py_ssize_t op, x, y, c
    cdef i64 u, v
    for op in range(3):
        for x in range(n):
            for y in range(n):
                if block_of[x] != block_of[y]:
                    continue
                for c in range(n):
                    if op == 0:
                        u = add[x * n + c]
                        v = add[y * n + c]
                    elif op == 1:
                        u = mul[x * n + c]
                        v = mul[y * n + c]
                    else:
                        u = mul[c * n + x]
                        v = mul[c * n + y]
                    if block_of[u] != block_of[v]:
                        return op, x, y, c
    return None
