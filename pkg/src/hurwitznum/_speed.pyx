# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan over fixed-point-free involutions with a fixed first pair.

Mirrors the pure-Python kernel: walk all perfect matchings of {0..d-1} that
pair 0 with ``first``, compose each with the anchor, keep those whose
composition has the target cycle type and which, together with the anchor,
act transitively.  Returns the surviving involutions as image tuples.
"""

from libc.stdlib cimport free, malloc

DEF MAXD = 32


cdef struct ScanCtx:
    int d
    int left
    int ncyc_target
    int nroots
    int count
    int cap
    int* phi
    int* target
    int* parent
    int* out


cdef bint _check(ScanCtx* ctx, int* v) noexcept nogil:
    cdef int d = ctx.d
    cdef int i, x, n, rx, ry, comps
    cdef int t[MAXD]
    cdef int stamp[MAXD]
    cdef int lens[MAXD]
    cdef int uf[MAXD]

    if ctx.left:
        for i in range(d):
            t[i] = v[ctx.phi[i]]
    else:
        for i in range(d):
            t[i] = ctx.phi[v[i]]

    cdef int ncyc = 0
    for i in range(d):
        stamp[i] = 0
    for i in range(d):
        if stamp[i]:
            continue
        n = 0
        x = i
        while not stamp[x]:
            stamp[x] = 1
            x = t[x]
            n += 1
        if ncyc >= ctx.ncyc_target:
            return 0
        lens[ncyc] = n
        ncyc += 1
    if ncyc != ctx.ncyc_target:
        return 0
    # Insertion sort, descending, then compare with the target type.
    cdef int j, key
    for i in range(1, ncyc):
        key = lens[i]
        j = i - 1
        while j >= 0 and lens[j] < key:
            lens[j + 1] = lens[j]
            j -= 1
        lens[j + 1] = key
    for i in range(ncyc):
        if lens[i] != ctx.target[i]:
            return 0

    # Transitivity of <anchor, v>: start from the anchor's components and
    # union x with v[x].
    for i in range(d):
        uf[i] = ctx.parent[i]
    comps = ctx.nroots
    for i in range(d):
        x = i
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        rx = x
        x = v[i]
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        ry = x
        if rx != ry:
            uf[rx] = ry
            comps -= 1
            if comps == 1:
                return 1
    return comps == 1


cdef bint _emit(ScanCtx* ctx, int* v) noexcept nogil:
    cdef int i
    cdef int* grown
    if ctx.count == ctx.cap:
        ctx.cap = ctx.cap * 2 if ctx.cap else 64
        grown = <int*> malloc(ctx.cap * ctx.d * sizeof(int))
        if grown == NULL:
            return 0
        for i in range(ctx.count * ctx.d):
            grown[i] = ctx.out[i]
        free(ctx.out)
        ctx.out = grown
    for i in range(ctx.d):
        ctx.out[ctx.count * ctx.d + i] = v[i]
    ctx.count += 1
    return 1


cdef bint _scan(ScanCtx* ctx, int* v, int* used, int npaired) noexcept nogil:
    cdef int d = ctx.d
    cdef int a, b
    if npaired == d:
        if _check(ctx, v):
            return _emit(ctx, v)
        return 1
    a = 0
    while used[a]:
        a += 1
    used[a] = 1
    for b in range(a + 1, d):
        if used[b]:
            continue
        used[b] = 1
        v[a] = b
        v[b] = a
        if not _scan(ctx, v, used, npaired + 2):
            return 0
        used[b] = 0
    used[a] = 0
    return 1


def backend():
    """Identify this implementation."""
    return "compiled"


def scan_involutions_block(int d, int first, phi, bint left, target, parent, int nroots):
    """Survivors among involutions pairing 0 with ``first``; see the pure twin."""
    if d < 2 or d > MAXD or d % 2:
        raise ValueError(f"degree must be even and at most {MAXD}, got {d}")
    if not 1 <= first < d:
        raise ValueError(f"first partner must be in 1..{d - 1}, got {first}")

    cdef ScanCtx ctx
    cdef int v[MAXD]
    cdef int used[MAXD]
    cdef int phi_c[MAXD]
    cdef int target_c[MAXD]
    cdef int parent_c[MAXD]
    cdef int i, ok

    ctx.d = d
    ctx.left = 1 if left else 0
    ctx.ncyc_target = len(target)
    ctx.nroots = nroots
    ctx.count = 0
    ctx.cap = 0
    ctx.out = NULL
    for i in range(d):
        phi_c[i] = phi[i]
        parent_c[i] = parent[i]
        used[i] = 0
        v[i] = i
    for i in range(ctx.ncyc_target):
        target_c[i] = target[i]
    ctx.phi = phi_c
    ctx.target = target_c
    ctx.parent = parent_c

    used[0] = 1
    used[first] = 1
    v[0] = first
    v[first] = 0
    with nogil:
        ok = _scan(&ctx, v, used, 2)
    if not ok:
        free(ctx.out)
        raise MemoryError("survivor buffer allocation failed")

    try:
        return [
            tuple(ctx.out[i * d + j] for j in range(d)) for i in range(ctx.count)
        ]
    finally:
        free(ctx.out)
