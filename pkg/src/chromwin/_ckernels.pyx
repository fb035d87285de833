# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled small-graph kernels (n <= 64, adjacency as uint64 bitmasks).

Mirrors ``_kernels_py`` function by function; results must be identical.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

cdef enum:
    MAXN = 64


cdef inline int popc(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)


cdef int PI[128]
cdef int PJ[128]


cdef void _init_pairs():
    cdef int i, j, k = 0
    for j in range(16):
        for i in range(j):
            PI[k] = i
            PJ[k] = j
            k += 1


_init_pairs()


cdef inline void _decode(int n, u64 code, u64* adj) nogil:
    cdef int k
    memset(adj, 0, n * sizeof(u64))
    while code:
        k = ctz(code)
        code &= code - 1
        adj[PI[k]] |= (<u64>1) << PJ[k]
        adj[PJ[k]] |= (<u64>1) << PI[k]


def decode(int n, code):
    cdef u64 adj[MAXN]
    _decode(n, <u64>code, adj)
    return [adj[i] for i in range(n)]


cdef bint _has_clique(const u64* adj, u64 cand, int need) nogil:
    cdef int v
    if need <= 0:
        return True
    if popc(cand) < need:
        return False
    if need == 1:
        return True
    while cand:
        v = ctz(cand)
        cand &= cand - 1
        if _has_clique(adj, cand & adj[v], need - 1):
            return True
        if popc(cand) < need:
            return False
    return False


cdef inline u64 _full(int n) nogil:
    return (~(<u64>0)) if n >= 64 else (((<u64>1) << n) - 1)


cdef int _load(adj_list, u64* adj) except -1:
    cdef int n = len(adj_list)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 vertices")
    for i in range(n):
        adj[i] = <u64>adj_list[i]
    return n


def has_clique(adj_list, int k, cand=-1):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    cdef u64 c = _full(n)
    if cand >= 0:
        c &= <u64>(cand & 0xFFFFFFFFFFFFFFFF)
    return bool(_has_clique(adj, c, k))


cdef int _clique_number(const u64* adj, int n) nogil:
    cdef int k
    if n == 0:
        return 0
    k = 1
    while k < n and _has_clique(adj, _full(n), k + 1):
        k += 1
    return k


def clique_number(adj_list):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    return _clique_number(adj, n)


cdef bint _place(const u64* adj, const int* order, int n, int i, int used, int k, u64* classes) nogil:
    cdef int v, c
    cdef u64 nb
    if i == n:
        return True
    v = order[i]
    nb = adj[v]
    for c in range(used):
        if not (classes[c] & nb):
            classes[c] |= (<u64>1) << v
            if _place(adj, order, n, i + 1, used, k, classes):
                return True
            classes[c] ^= (<u64>1) << v
    if used < k:
        classes[used] = (<u64>1) << v
        if _place(adj, order, n, i + 1, used + 1, k, classes):
            return True
        classes[used] = 0
    return False


cdef bint _is_colorable(const u64* adj, int n, int k) nogil:
    cdef int order[MAXN]
    cdef u64 classes[MAXN]
    cdef int i, j, tmp, di, dj
    if n == 0:
        return True
    if k <= 0:
        return False
    for i in range(n):
        order[i] = i
    # insertion sort: degree descending, then label ascending
    for i in range(1, n):
        j = i
        while j > 0:
            di = popc(adj[order[j]])
            dj = popc(adj[order[j - 1]])
            if di > dj or (di == dj and order[j] < order[j - 1]):
                tmp = order[j]
                order[j] = order[j - 1]
                order[j - 1] = tmp
                j -= 1
            else:
                break
    memset(classes, 0, sizeof(classes))
    return _place(adj, order, n, 0, 0, k, classes)


def is_colorable(adj_list, int k):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    return bool(_is_colorable(adj, n, k))


def chromatic_number(adj_list):
    cdef u64 adj[MAXN]
    cdef int n = _load(adj_list, adj)
    cdef int k
    if n == 0:
        return 0
    k = _clique_number(adj, n)
    while not _is_colorable(adj, n, k):
        k += 1
    return k


cdef long _turan_edges(long k, long m):
    cdef long q, rem
    if m == 0:
        return 0
    q = m // k
    rem = m % k
    return (m * m - rem * (q + 1) * (q + 1) - (k - rem) * q * q) // 2


cdef void _rec_cliques(const u64* adj, u64 cand, u64 chosen, int need, unsigned char* has) nogil:
    cdef int v
    cdef u64 low
    if need == 0:
        has[chosen] = 1
        return
    while cand:
        low = cand & (~cand + 1)
        v = ctz(cand)
        cand ^= low
        _rec_cliques(adj, cand & adj[v], chosen | low, need - 1, has)


cdef void _clique_closure(const u64* adj, int n, int k, unsigned char* has) nogil:
    cdef long size = (<long>1) << n
    cdef long m
    cdef int i
    cdef long bit
    if k <= 0:
        memset(has, 1, size)
        return
    memset(has, 0, size)
    _rec_cliques(adj, <u64>(size - 1), 0, k, has)
    for i in range(n):
        bit = (<long>1) << i
        for m in range(size):
            if (m & bit) and has[m ^ bit]:
                has[m] = 1


def _bucket_add(eq_counts, eq_items, int bucket, item, int cap):
    eq_counts[bucket] += 1
    if len(eq_items[bucket]) < cap:
        eq_items[bucket].append(item)


def scan_lemma_basic(int n, int r, int t, long long start, long long stop, int eq_cap=16):
    cdef u64 adj[MAXN]
    cdef long phi[MAXN + 1]
    cdef long size = (<long>1) << n
    cdef unsigned char* has_t = <unsigned char*>malloc(size)
    cdef long long code
    cdef long A, e
    cdef int a
    cdef long long graphs = 0, kr_free = 0, checked = 0, below_checked = 0, below_viol = 0
    violations = []
    eq_counts = [0] * (n + 1)
    equalities = [[] for _ in range(n + 1)]
    for a in range(n + 1):
        phi[a] = _turan_edges(t - 1, a) + _turan_edges(r - t, n - a) + a * (n - a)
    try:
        for code in range(start, stop):
            graphs += 1
            _decode(n, <u64>code, adj)
            if _has_clique(adj, _full(n), r):
                continue
            kr_free += 1
            e = popc(<u64>code)
            _clique_closure(adj, n, t, has_t)
            for A in range(size):
                if has_t[A]:
                    continue
                a = popc(<u64>A)
                if a * (r - 1) >= (t - 1) * n:
                    checked += 1
                    if e > phi[a]:
                        violations.append((code, A))
                    elif e == phi[a]:
                        _bucket_add(eq_counts, equalities, a, (code, A), eq_cap)
                else:
                    below_checked += 1
                    if e > phi[a]:
                        below_viol += 1
    finally:
        free(has_t)
    return {
        "graphs": graphs, "kr_free": kr_free, "checked": checked, "violations": violations,
        "eq_counts": eq_counts, "equalities": equalities,
        "below_checked": below_checked, "below_violations": below_viol,
    }


def scan_lemma_xyz(int n, int r, long long start, long long stop, int eq_cap=16):
    cdef u64 adj[MAXN]
    cdef long size = (<long>1) << n
    cdef long full = size - 1
    cdef unsigned char* has_y = <unsigned char*>malloc(size)
    cdef unsigned char* has_xy = <unsigned char*>malloc(size)
    cdef long long code
    cdef long X, Y, rest, lhs, rhs
    cdef int x, y, z
    cdef int c = 2 * (r - 3)
    cdef int nb = (n + 1) * (n + 1)
    cdef long long graphs = 0, kr_free = 0, checked = 0
    violations = []
    eq_counts = [0] * nb
    equalities = [[] for _ in range(nb)]
    try:
        for code in range(start, stop):
            graphs += 1
            _decode(n, <u64>code, adj)
            if _has_clique(adj, _full(n), r):
                continue
            kr_free += 1
            lhs = c * popc(<u64>code)
            _clique_closure(adj, n, r - 2, has_y)
            _clique_closure(adj, n, r - 1, has_xy)
            for Y in range(size):
                if has_y[Y]:
                    continue
                y = popc(<u64>Y)
                rest = full & ~Y
                X = rest
                while True:
                    x = popc(<u64>X)
                    z = n - x - y
                    if y >= (r - 3) * x and x >= z and not has_xy[X | Y]:
                        checked += 1
                        rhs = (r - 4) * y * y + c * (x * y + y * z + z * x)
                        if lhs > rhs:
                            violations.append((code, X, Y))
                        elif lhs == rhs:
                            _bucket_add(eq_counts, equalities, y * (n + 1) + x, (code, X, Y), eq_cap)
                    if X == 0:
                        break
                    X = (X - 1) & rest
    finally:
        free(has_y)
        free(has_xy)
    return {
        "graphs": graphs, "kr_free": kr_free, "checked": checked, "violations": violations,
        "eq_counts": eq_counts, "equalities": equalities,
    }


def scan_aes(int n, int r, long long start, long long stop, int eq_cap=16):
    cdef u64 adj[MAXN]
    cdef long long code
    cdef int i, mindeg, d
    cdef long cmp
    cdef long long graphs = 0, checked = 0, boundary_count = 0
    violations = []
    boundary = []
    for code in range(start, stop):
        graphs += 1
        _decode(n, <u64>code, adj)
        mindeg = 0
        if n:
            mindeg = popc(adj[0])
            for i in range(1, n):
                d = popc(adj[i])
                if d < mindeg:
                    mindeg = d
        cmp = mindeg * (3 * r - 4) - (3 * r - 7) * n
        if cmp < 0 or _has_clique(adj, _full(n), r):
            continue
        if cmp > 0:
            checked += 1
            if not _is_colorable(adj, n, r - 1):
                violations.append(code)
        elif not _is_colorable(adj, n, r - 1):
            boundary_count += 1
            if len(boundary) < eq_cap:
                boundary.append(code)
    return {"graphs": graphs, "checked": checked, "violations": violations,
            "boundary_count": boundary_count, "boundary": boundary}


cdef bint _augment(const u64* nbrs, int i, u64* seen, int* match_right) nogil:
    cdef u64 m = nbrs[i] & ~seen[0]
    cdef int y
    while m:
        y = ctz(m)
        m &= m - 1
        seen[0] |= (<u64>1) << y
        if match_right[y] < 0 or _augment(nbrs, match_right[y], seen, match_right):
            match_right[y] = i
            return True
    return False


cdef int _max_matching(const u64* nbrs, int a, int b) nogil:
    cdef int match_right[64]
    cdef int i, size = 0
    cdef u64 seen
    for i in range(b):
        match_right[i] = -1
    for i in range(a):
        seen = 0
        if _augment(nbrs, i, &seen, match_right):
            size += 1
    return size


cdef int _deficiency(const u64* nbrs, int a, u64* nunion) nogil:
    cdef long S, low
    cdef int best = 0, d
    nunion[0] = 0
    for S in range(1, (<long>1) << a):
        low = S & -S
        nunion[S] = nunion[S ^ low] | nbrs[ctz(<u64>low)]
        d = popc(<u64>S) - popc(nunion[S])
        if d > best:
            best = d
    return best


def bipartite_max_matching(nbrs_list, int b):
    cdef u64 nbrs[MAXN]
    cdef int a = _load(nbrs_list, nbrs)
    return _max_matching(nbrs, a, b)


def hall_deficiency_masks(nbrs_list):
    cdef u64 nbrs[MAXN]
    cdef int a = _load(nbrs_list, nbrs)
    cdef u64* nunion
    if a > 24:
        raise ValueError("left side too large for subset enumeration")
    nunion = <u64*>malloc(((<long>1) << a) * sizeof(u64))
    try:
        return _deficiency(nbrs, a, nunion)
    finally:
        free(nunion)


def scan_hall(int a, int b, long long start, long long stop, int cap=16):
    cdef u64 nbrs[MAXN]
    cdef u64 nunion[1 << 12]
    cdef u64 rowmask = ((<u64>1) << b) - 1
    cdef long long code, graphs = 0, mismatch_count = 0
    cdef int i, formula, mm
    if a > 12:
        raise ValueError("scan_hall supports at most 12 left vertices")
    mismatches = []
    for code in range(start, stop):
        graphs += 1
        for i in range(a):
            nbrs[i] = ((<u64>code) >> (i * b)) & rowmask
        formula = a - _deficiency(nbrs, a, nunion)
        mm = _max_matching(nbrs, a, b)
        if formula != mm:
            mismatch_count += 1
            if len(mismatches) < cap:
                mismatches.append((code, formula, mm))
    return {"graphs": graphs, "mismatch_count": mismatch_count, "mismatches": mismatches}
