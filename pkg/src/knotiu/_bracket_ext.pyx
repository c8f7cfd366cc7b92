# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bracket kernels: the tangle DP used by default, and full state
enumeration kept as an independent check."""

from libc.stdlib cimport calloc, free, malloc


cdef inline int _find(int* parent, int u) nogil:
    while parent[u] != u:
        parent[u] = parent[parent[u]]
        u = parent[u]
    return u


def state_counts(list flat, int n_arcs):
    """Histogram of Kauffman states of a PD code.

    ``flat`` holds 4 labels per crossing (labels in 1..n_arcs).  Returns
    ``counts`` with ``counts[a][l]`` the number of states having ``a``
    A-smoothings and ``l`` loops.
    """
    cdef int c = len(flat) // 4
    cdef int i, k, a, loops, ra, rb, s0, s1, s2, s3
    cdef unsigned long long state, total
    if c > 40:
        raise ValueError("too many crossings for state enumeration")
    cdef int* pd = <int*>malloc(4 * c * sizeof(int))
    cdef int* parent = <int*>malloc((n_arcs + 1) * sizeof(int))
    cdef long long* hist = <long long*>malloc((c + 1) * (n_arcs + 2) * sizeof(long long))
    if pd == NULL or parent == NULL or hist == NULL:
        free(pd); free(parent); free(hist)
        raise MemoryError()
    try:
        for i in range(4 * c):
            pd[i] = flat[i]
        for i in range((c + 1) * (n_arcs + 2)):
            hist[i] = 0
        total = 1ULL << c
        with nogil:
            state = 0
            while state < total:
                for k in range(n_arcs + 1):
                    parent[k] = k
                loops = n_arcs
                a = 0
                for i in range(c):
                    s0 = pd[4 * i]; s1 = pd[4 * i + 1]; s2 = pd[4 * i + 2]; s3 = pd[4 * i + 3]
                    if (state >> i) & 1:
                        # B: (a, d) and (b, c)
                        ra = _find(parent, s0); rb = _find(parent, s3)
                        if ra != rb:
                            parent[ra] = rb; loops -= 1
                        ra = _find(parent, s1); rb = _find(parent, s2)
                        if ra != rb:
                            parent[ra] = rb; loops -= 1
                    else:
                        a += 1
                        ra = _find(parent, s0); rb = _find(parent, s1)
                        if ra != rb:
                            parent[ra] = rb; loops -= 1
                        ra = _find(parent, s2); rb = _find(parent, s3)
                        if ra != rb:
                            parent[ra] = rb; loops -= 1
                hist[a * (n_arcs + 2) + loops] += 1
                state += 1
        return [[hist[a * (n_arcs + 2) + k] for k in range(n_arcs + 2)] for a in range(c + 1)]
    finally:
        free(pd); free(parent); free(hist)


cdef inline int _join(int* mate, int u, int v) nogil:
    """Connect labels u and v in the matching; 1 if that closes a loop."""
    cdef int fu, fv
    if u == v:
        return 1
    if mate[u] == v:
        mate[u] = 0
        mate[v] = 0
        return 1
    fu = mate[u]
    if fu:
        mate[u] = 0
        mate[fu] = 0
    else:
        fu = u
    fv = mate[v]
    if fv:
        mate[v] = 0
        mate[fv] = 0
    else:
        fv = v
    mate[fu] = fv
    mate[fv] = fu
    return 0


def tangle_dp(list flat, int n_arcs):
    """Sum over states of ``A^(#A - #B) delta^loops`` by a tangle DP.

    ``flat`` holds 4 labels per crossing, in the order the crossings are to
    be added.  States are matchings of the open labels.  Returns
    ``(offset, coeffs)`` with ``coeffs[k]`` the coefficient of ``A^(k - offset)``.
    """
    cdef int c = len(flat) // 4
    cdef int R = c + 2 * n_arcs + 6
    cdef int W = 2 * R + 1
    cdef int i, k, e, s, loops, shift, n_open, x, j, tmp, nk_len
    cdef int lab[4]
    cdef long long v
    cdef long long* cur
    cdef long long* nxt
    cdef long long* src
    cdef long long* dst
    cdef Py_ssize_t used, slot
    cdef int* mate = <int*>calloc(n_arcs + 1, sizeof(int))
    cdef int* opened = <int*>malloc((n_arcs + 8) * sizeof(int))
    cur = <long long*>calloc(W, sizeof(long long))
    if mate == NULL or opened == NULL or cur == NULL:
        free(mate); free(opened); free(cur)
        raise MemoryError()
    cur[R] = 1
    states = {(): 0}
    try:
        for i in range(c):
            for k in range(4):
                lab[k] = flat[4 * i + k]
            nxt = <long long*>calloc(2 * len(states) * W, sizeof(long long))
            if nxt == NULL:
                raise MemoryError()
            new_states = {}
            used = 0
            for key, slot in states.items():
                src = cur + slot * W
                for s in range(2):
                    n_open = len(key)
                    for k in range(0, n_open, 2):
                        mate[<int>key[k]] = key[k + 1]
                        mate[<int>key[k + 1]] = key[k]
                    if s == 0:
                        shift = 1
                        loops = _join(mate, lab[0], lab[1]) + _join(mate, lab[2], lab[3])
                    else:
                        shift = -1
                        loops = _join(mate, lab[0], lab[3]) + _join(mate, lab[1], lab[2])
                    # open labels after the move, smaller end of each pair, sorted
                    nk_len = 0
                    for k in range(n_open + 4):
                        x = key[k] if k < n_open else lab[k - n_open]
                        if mate[x] > x:
                            j = nk_len
                            while j > 0 and opened[j - 1] > x:
                                opened[j] = opened[j - 1]
                                j -= 1
                            opened[j] = x
                            nk_len += 1
                    parts = []
                    for j in range(nk_len):
                        if j == 0 or opened[j] != opened[j - 1]:
                            parts += (opened[j], mate[opened[j]])
                    nk = tuple(parts)
                    for k in range(n_open):
                        mate[<int>key[k]] = 0
                    for k in range(4):
                        mate[lab[k]] = 0
                    tslot = new_states.get(nk)
                    if tslot is None:
                        tslot = used
                        new_states[nk] = used
                        used += 1
                    dst = nxt + <Py_ssize_t>tslot * W
                    for e in range(5, W - 5):
                        v = src[e]
                        if v == 0:
                            continue
                        tmp = e + shift
                        if loops == 0:
                            dst[tmp] += v
                        elif loops == 1:
                            dst[tmp + 2] -= v
                            dst[tmp - 2] -= v
                        else:
                            dst[tmp + 4] += v
                            dst[tmp] += 2 * v
                            dst[tmp - 4] += v
            free(cur)
            cur = nxt
            states = new_states
        slot = states.get((), -1)
        if slot < 0:
            return R, []
        return R, [cur[slot * W + e] for e in range(W)]
    finally:
        free(mate); free(opened); free(cur)
