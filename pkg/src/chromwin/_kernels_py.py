"""Pure-Python small-graph kernels (n <= 64, adjacency as int bitmasks).

Reference semantics for the compiled ``_ckernels`` module; both must return
identical values for identical arguments.
"""

from __future__ import annotations

BACKEND = "python"


def _pairs(n):
    return [(i, j) for j in range(n) for i in range(j)]


def decode(n, code):
    pairs = _PAIRS if n <= 12 else _pairs(n)
    adj = [0] * n
    k = 0
    while code:
        if code & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        code >>= 1
        k += 1
    return adj


_PAIRS = _pairs(12)


def _has_clique_rec(adj, cand, need):
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    if need == 1:
        return True
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if _has_clique_rec(adj, cand & adj[v], need - 1):
            return True
        if cand.bit_count() < need:
            return False
    return False


def has_clique(adj, k, cand=-1):
    """True iff the vertices in ``cand`` (default: all) contain a k-clique."""
    n = len(adj)
    full = (1 << n) - 1
    cand = full if cand < 0 else cand & full
    return _has_clique_rec(adj, cand, k)


def clique_number(adj):
    n = len(adj)
    if n == 0:
        return 0
    k = 1
    while k < n and has_clique(adj, k + 1):
        k += 1
    return k


def is_colorable(adj, k):
    n = len(adj)
    if n == 0:
        return True
    if k <= 0:
        return False
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    classes = [0] * k

    def place(i, used):
        if i == n:
            return True
        v = order[i]
        nb = adj[v]
        for c in range(used):
            if not classes[c] & nb:
                classes[c] |= 1 << v
                if place(i + 1, used):
                    return True
                classes[c] ^= 1 << v
        if used < k:
            classes[used] = 1 << v
            if place(i + 1, used + 1):
                return True
            classes[used] = 0
        return False

    return place(0, 0)


def chromatic_number(adj):
    n = len(adj)
    if n == 0:
        return 0
    k = clique_number(adj)
    while not is_colorable(adj, k):
        k += 1
    return k


def _turan_edges(k, m):
    if m == 0:
        return 0
    q, rem = divmod(m, k)
    return (m * m - rem * (q + 1) ** 2 - (k - rem) * q * q) // 2


def _clique_closure(adj, n, k):
    """has[mask] == 1 iff the vertex set ``mask`` contains a k-clique."""
    size = 1 << n
    has = bytearray(size)
    if k <= 0:
        for m in range(size):
            has[m] = 1
        return has

    def rec(cand, chosen, need):
        if need == 0:
            has[chosen] = 1
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(cand & adj[v], chosen | low, need - 1)

    rec(size - 1, 0, k)
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if m & bit and has[m ^ bit]:
                has[m] = 1
    return has


def _bucket_add(eq_counts, eq_items, bucket, item, cap):
    eq_counts[bucket] += 1
    if len(eq_items[bucket]) < cap:
        eq_items[bucket].append(item)


def scan_lemma_basic(n, r, t, start, stop, eq_cap=16):
    """Check e(G) <= e(T_{t-1}(a) v T_{r-t}(n-a)) for graph codes in [start, stop).

    For every K_r-free G and every A with G[A] K_t-free: if a(r-1) >= (t-1)n the
    pair is checked, otherwise it is tallied as exploratory (below threshold).
    Equality witnesses are bucketed by a = |A|.
    """
    phi = [_turan_edges(t - 1, a) + _turan_edges(r - t, n - a) + a * (n - a) for a in range(n + 1)]
    size = 1 << n
    pc = [m.bit_count() for m in range(size)]
    out = {
        "graphs": 0, "kr_free": 0, "checked": 0, "violations": [],
        "eq_counts": [0] * (n + 1), "equalities": [[] for _ in range(n + 1)],
        "below_checked": 0, "below_violations": 0,
    }
    for code in range(start, stop):
        out["graphs"] += 1
        adj = decode(n, code)
        if has_clique(adj, r):
            continue
        out["kr_free"] += 1
        e = code.bit_count()
        has_t = _clique_closure(adj, n, t)
        for A in range(size):
            if has_t[A]:
                continue
            a = pc[A]
            if a * (r - 1) >= (t - 1) * n:
                out["checked"] += 1
                if e > phi[a]:
                    out["violations"].append((code, A))
                elif e == phi[a]:
                    _bucket_add(out["eq_counts"], out["equalities"], a, (code, A), eq_cap)
            else:
                out["below_checked"] += 1
                if e > phi[a]:
                    out["below_violations"] += 1
    return out


def scan_lemma_xyz(n, r, start, stop, eq_cap=16):
    """Check the X/Y/Z edge bound over ordered partitions for graph codes in [start, stop).

    Bound in integers: 2(r-3)e <= (r-4)y^2 + 2(r-3)(xy + yz + zx).
    Equality witnesses are bucketed by y * (n + 1) + x.
    """
    size = 1 << n
    full = size - 1
    pc = [m.bit_count() for m in range(size)]
    nb = (n + 1) * (n + 1)
    out = {
        "graphs": 0, "kr_free": 0, "checked": 0, "violations": [],
        "eq_counts": [0] * nb, "equalities": [[] for _ in range(nb)],
    }
    c = 2 * (r - 3)
    for code in range(start, stop):
        out["graphs"] += 1
        adj = decode(n, code)
        if has_clique(adj, r):
            continue
        out["kr_free"] += 1
        lhs = c * code.bit_count()
        has_y = _clique_closure(adj, n, r - 2)
        has_xy = _clique_closure(adj, n, r - 1)
        for Y in range(size):
            if has_y[Y]:
                continue
            y = pc[Y]
            rest = full & ~Y
            X = rest
            while True:
                x = pc[X]
                z = n - x - y
                if y >= (r - 3) * x and x >= z and not has_xy[X | Y]:
                    out["checked"] += 1
                    rhs = (r - 4) * y * y + c * (x * y + y * z + z * x)
                    if lhs > rhs:
                        out["violations"].append((code, X, Y))
                    elif lhs == rhs:
                        _bucket_add(out["eq_counts"], out["equalities"], y * (n + 1) + x, (code, X, Y), eq_cap)
                if X == 0:
                    break
                X = (X - 1) & rest
    return out


def scan_aes(n, r, start, stop, eq_cap=16):
    """K_r-free graphs with min degree above (3r-7)n/(3r-4) must be (r-1)-colourable.

    ``checked`` counts K_r-free graphs strictly above the threshold; graphs exactly
    at the threshold with chromatic number >= r are boundary witnesses.
    """
    out = {"graphs": 0, "checked": 0, "violations": [], "boundary_count": 0, "boundary": []}
    for code in range(start, stop):
        out["graphs"] += 1
        adj = decode(n, code)
        mindeg = min(m.bit_count() for m in adj) if n else 0
        cmp = mindeg * (3 * r - 4) - (3 * r - 7) * n
        if cmp < 0 or has_clique(adj, r):
            continue
        if cmp > 0:
            out["checked"] += 1
            if not is_colorable(adj, r - 1):
                out["violations"].append(code)
        elif not is_colorable(adj, r - 1):
            out["boundary_count"] += 1
            if len(out["boundary"]) < eq_cap:
                out["boundary"].append(code)
    return out


def bipartite_max_matching(nbrs, b):
    """Augmenting-path (Kuhn) maximum matching; ``nbrs[i]`` is a bitmask over b right vertices."""
    match_right = [-1] * b

    def augment(i, seen):
        m = nbrs[i] & ~seen
        while m:
            low = m & -m
            y = low.bit_length() - 1
            m ^= low
            seen |= low
            if match_right[y] < 0:
                match_right[y] = i
                return True, seen
            ok, seen = augment(match_right[y], seen)
            if ok:
                match_right[y] = i
                return True, seen
        return False, seen

    size = 0
    for i in range(len(nbrs)):
        ok, _ = augment(i, 0)
        size += ok
    return size


def hall_deficiency_masks(nbrs):
    """max over S subset of the left side of |S| - |N(S)| (S = {} gives 0)."""
    a = len(nbrs)
    union = [0] * (1 << a)
    best = 0
    for S in range(1, 1 << a):
        low = S & -S
        union[S] = union[S ^ low] | nbrs[low.bit_length() - 1]
        d = S.bit_count() - union[S].bit_count()
        if d > best:
            best = d
    return best


def scan_hall(a, b, start, stop, cap=16):
    """Compare |X| - deficiency against augmenting-path matching for codes in [start, stop)."""
    out = {"graphs": 0, "mismatch_count": 0, "mismatches": []}
    rowmask = (1 << b) - 1
    for code in range(start, stop):
        out["graphs"] += 1
        nbrs = [(code >> (i * b)) & rowmask for i in range(a)]
        formula = a - hall_deficiency_masks(nbrs)
        mm = bipartite_max_matching(nbrs, b)
        if formula != mm:
            out["mismatch_count"] += 1
            if len(out["mismatches"]) < cap:
                out["mismatches"].append((code, formula, mm))
    return out
