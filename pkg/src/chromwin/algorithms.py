"""Exact algorithms on small graphs: cliques, colouring, girth, matchings, cycles, containment."""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

from . import kernels
from .graph import Graph, GraphError, bits, graph_from_code, pair_list, to_mask

SMALL = 64


class InstanceTooLarge(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- cliques


def _degree_order(g: Graph) -> tuple[list[int], list[int]]:
    """Relabelled adjacency (highest degree first) plus the new->old map."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for i, v in enumerate(order):
        adj[i] = to_mask(pos[w] for w in bits(g.adj[v]))
    return adj, order


class _CliqueSearch:
    """Branch and bound with greedy-colouring bounds (Tomita-style) on int bitsets."""

    def __init__(self, adj: list[int], budget: int | None):
        self.adj = adj
        self.best: list[int] = []
        self.target: int | None = None
        self.nodes = 0
        self.budget = budget

    def _colour(self, P: int) -> tuple[list[int], list[int]]:
        adj = self.adj
        order: list[int] = []
        bounds: list[int] = []
        k = 0
        U = P
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~adj[v] & ~low
                U ^= low
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(self, R: list[int], P: int) -> bool:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"clique search exceeded {self.budget} nodes")
        order, bounds = self._colour(P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + bounds[i] <= len(self.best):
                return False
            v = order[i]
            R.append(v)
            newP = P & self.adj[v]
            if newP:
                if self.expand(R, newP):
                    return True
            elif len(R) > len(self.best):
                self.best = list(R)
                if self.target is not None and len(self.best) >= self.target:
                    return True
            R.pop()
            P &= ~(1 << v)
        return False


def max_clique(g: Graph, budget: int | None = None) -> list[int]:
    """A maximum clique (sorted vertex list)."""
    if g.n == 0:
        return []
    adj, order = _degree_order(g)
    s = _CliqueSearch(adj, budget)
    s.expand([], (1 << g.n) - 1)
    return sorted(order[v] for v in s.best)


def clique_number(g: Graph, budget: int | None = None) -> int:
    if g.n <= SMALL:
        return kernels.clique_number(list(g.adj))
    return len(max_clique(g, budget))


def has_clique(g: Graph, k: int, budget: int | None = None) -> bool:
    """True iff g contains K_k (k <= 0 is trivially true)."""
    if k <= 0:
        return True
    if g.n <= SMALL:
        return kernels.has_clique(list(g.adj), k)
    adj, _ = _degree_order(g)
    s = _CliqueSearch(adj, budget)
    s.best = [-1] * (k - 1)  # only cliques of size >= k improve on this
    s.target = k
    return s.expand([], (1 << g.n) - 1)


def iter_cliques(g: Graph, k: int, within: int | None = None) -> Iterator[int]:
    """Yield every k-clique as a vertex bitmask (each exactly once)."""
    start = g.full_mask if within is None else within

    def rec(cand: int, chosen: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(cand & g.adj[v], chosen | low, need - 1)

    if k <= 0:
        yield 0
        return
    yield from rec(start, 0, k)


def count_cliques(g: Graph, k: int) -> int:
    return sum(1 for _ in iter_cliques(g, k))


# ---------------------------------------------------------------- colouring


def greedy_coloring(g: Graph) -> list[int]:
    """Largest-degree-first greedy colouring; returns a colour per vertex."""
    colour = [-1] * g.n
    for v in sorted(range(g.n), key=lambda u: (-g.degree(u), u)):
        used = {colour[w] for w in bits(g.adj[v])}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return colour


def is_colorable(g: Graph, k: int) -> bool:
    if g.n > SMALL:
        raise InstanceTooLarge("exact colouring supports at most 64 vertices")
    return kernels.is_colorable(list(g.adj), k)


def chromatic_number(g: Graph, cap: int = 16) -> int:
    """Exact chromatic number; clique number bounds from below, greedy from above."""
    if g.n > cap:
        raise InstanceTooLarge(f"chromatic_number capped at n <= {cap} (got {g.n})")
    if g.n == 0:
        return 0
    lower = clique_number(g)
    upper = max(greedy_coloring(g)) + 1
    for k in range(lower, upper):
        if kernels.is_colorable(list(g.adj), k):
            return k
    return upper


# ---------------------------------------------------------------- structure


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - len(components(g))


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def simple_cycles(g: Graph, cap: int = 10**6) -> list[tuple[int, ...]]:
    """Every simple cycle once, rotated to start at its minimum vertex.

    Of the two traversal directions the one with the smaller second vertex is kept.
    """
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        allowed = g.full_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(u: int, used: int) -> None:
            for w in bits(g.adj[u] & allowed & ~used):
                path.append(w)
                dfs(w, used | (1 << w))
                path.pop()
            if len(path) >= 3 and g.adj[u] >> s & 1 and path[1] < path[-1]:
                out.append(tuple(path))
                if len(out) > cap:
                    raise SearchBudgetExceeded(f"more than {cap} cycles")

        dfs(s, 1 << s)
    return out


def odd_cycles(g: Graph, cap: int = 10**6) -> list[tuple[int, ...]]:
    return [c for c in simple_cycles(g, cap) if len(c) % 2 == 1]


def is_independent(g: Graph, mask: int) -> bool:
    return all(not g.adj[v] & mask for v in bits(mask))


def kp_independence(g: Graph, p: int, cap: int = 20) -> int:
    """alpha_p(G): the largest S with G[S] free of K_p (p = 2 gives alpha)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if g.n > cap:
        raise InstanceTooLarge(f"kp_independence capped at n <= {cap}")
    adj = list(g.adj)
    n = g.n
    best = 0

    def creates_kp(S: int, v: int) -> bool:
        return kernels.has_clique(adj, p - 1, S & adj[v])

    def rec(i: int, S: int, size: int) -> None:
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = size
            return
        if not creates_kp(S, i):
            rec(i + 1, S | (1 << i), size + 1)
        rec(i + 1, S, size)

    rec(0, 0, 0)
    return best


# ---------------------------------------------------------------- bipartite matching


def _bipartite_rows(b: Graph, X: Iterable[int], Y: Iterable[int]) -> tuple[list[int], list[int], list[int]]:
    xs, ys = sorted(set(X)), sorted(set(Y))
    if set(xs) & set(ys):
        raise GraphError("the two sides must be disjoint")
    for v in xs + ys:
        if not 0 <= v < b.n:
            raise GraphError(f"vertex {v} out of range")
    xm, ym = to_mask(xs), to_mask(ys)
    for u, v in b.edges():
        if not ((xm >> u & 1 and ym >> v & 1) or (ym >> u & 1 and xm >> v & 1)):
            raise GraphError(f"edge ({u}, {v}) does not join the declared sides")
    ypos = {v: i for i, v in enumerate(ys)}
    rows = [to_mask(ypos[w] for w in bits(b.adj[x])) for x in xs]
    return rows, xs, ys


def matching_number(b: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """Maximum matching size by augmenting paths; B must only have X-Y edges."""
    rows, _, ys = _bipartite_rows(b, X, Y)
    return kernels.bipartite_max_matching(rows, len(ys)) if len(ys) <= SMALL else _kuhn(rows, len(ys))


def _kuhn(rows: list[int], b: int) -> int:
    from ._kernels_py import bipartite_max_matching

    return bipartite_max_matching(rows, b)


def hall_deficiency(b: Graph, X: Iterable[int], Y: Iterable[int] | None = None) -> int:
    """max over S subset of X of |S| - |N(S)|."""
    xs = sorted(set(X))
    if Y is None:
        Y = [v for v in range(b.n) if v not in set(xs)]
    rows, _, _ = _bipartite_rows(b, xs, Y)
    if len(rows) > 24:
        raise InstanceTooLarge("hall_deficiency enumerates subsets of X; |X| <= 24")
    return kernels.hall_deficiency_masks(rows)


# ---------------------------------------------------------------- subgraph containment


def find_subgraph(h: Graph, g: Graph, node_cap: int | None = 10**7) -> list[int] | None:
    """An injective map V(H) -> V(G) preserving edges (not necessarily induced), or None."""
    if h.n == 0:
        return []
    if h.n > g.n or h.edge_count > g.edge_count:
        return None
    # order H so that each vertex (after the first of its component) has an earlier neighbour
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        rest = [v for v in range(h.n) if not placed >> v & 1]
        linked = [v for v in rest if h.adj[v] & placed]
        pool = linked or rest
        v = max(pool, key=lambda u: ((h.adj[u] & placed).bit_count(), h.degree(u), -u))
        order.append(v)
        placed |= 1 << v
    gdeg = g.degrees()
    by_degree = [0] * (max(h.degrees(), default=0) + 1)
    for d in range(len(by_degree)):
        by_degree[d] = to_mask(w for w in range(g.n) if gdeg[w] >= d)
    image = [-1] * h.n
    nodes = 0

    def rec(i: int, used: int) -> bool:
        nonlocal nodes
        if i == h.n:
            return True
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise SearchBudgetExceeded(f"subgraph search exceeded {node_cap} nodes")
        v = order[i]
        cand = by_degree[h.degree(v)] & ~used
        for w in bits(h.adj[v]):
            if image[w] >= 0:
                cand &= g.adj[image[w]]
        for x in bits(cand):
            image[v] = x
            if rec(i + 1, used | (1 << x)):
                return True
        image[v] = -1
        return False

    return list(image) if rec(0, 0) else None


def contains_subgraph(h: Graph, g: Graph, node_cap: int | None = 10**7) -> bool:
    return find_subgraph(h, g, node_cap) is not None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Same order, same size and H embeds in G means the embedding is an isomorphism."""
    if g.n != h.n or g.edge_count != h.edge_count or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return contains_subgraph(h, g, node_cap=None)


# ---------------------------------------------------------------- enumeration


def enumerate_labeled_graphs(n: int, cap: int = 7) -> Iterator[Graph]:
    """Every labelled simple graph on n vertices, in increasing edge-code order."""
    if n > cap:
        raise InstanceTooLarge(f"labelled enumeration capped at n <= {cap}")
    for code in range(1 << len(pair_list(n))):
        yield graph_from_code(n, code)
