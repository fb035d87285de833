"""Zykov symmetrization: single rewiring steps and the class-merging procedure Z(G|A)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import kernels
from .algorithms import SMALL, has_clique
from .graph import Graph, GraphError, bits, induced, to_mask

MODES = ("current", "frozen")


def _mask(vertices, n: int) -> int:
    if isinstance(vertices, int):
        m = vertices
    else:
        m = to_mask(vertices)
    if m < 0 or m >> n:
        raise GraphError("vertex set is not contained in V(G)")
    return m


def order_key(degrees: list[int]) -> Callable[[int], tuple[int, int]]:
    return lambda v: (degrees[v], v)


def precedes(g: Graph, i: int, j: int, degrees: list[int] | None = None) -> bool:
    """i before j: smaller degree first, label breaks ties."""
    d = g.degrees() if degrees is None else degrees
    return (d[i], i) < (d[j], j)


def vertex_order(g: Graph) -> list[int]:
    """Vertices sorted by the total order (degree, then label)."""
    d = g.degrees()
    return sorted(range(g.n), key=order_key(d))


def vertex_comparator(g: Graph) -> Callable[[int, int], int]:
    d = g.degrees()

    def cmp(i: int, j: int) -> int:
        a, b = (d[i], i), (d[j], j)
        return (a > b) - (a < b)

    return cmp


def zykov_step(g: Graph, u: int, v: int) -> Graph:
    """Replace u by a twin of v: delete every edge at u, then join u to N(v)."""
    if u == v:
        raise GraphError("zykov_step needs two distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError("vertex out of range")
    if g.has_edge(u, v):
        raise GraphError(f"{u} and {v} are adjacent")
    adj = list(g.adj)
    _rewire(adj, u, v)
    return Graph(g.n, tuple(adj))


def _rewire(adj: list[int], u: int, v: int) -> None:
    ub = 1 << u
    for w in bits(adj[u]):
        adj[w] &= ~ub
    new = adj[v]
    adj[u] = new
    for w in bits(new):
        adj[w] |= ub


@dataclass(frozen=True)
class TwinClassPartition:
    """Classes of A under equal neighbourhoods, keyed by their smallest member."""

    classes: tuple[frozenset[int], ...]

    @property
    def indices(self) -> list[int]:
        return [min(c) for c in self.classes]

    def index_of(self, v: int) -> int:
        for c in self.classes:
            if v in c:
                return min(c)
        raise KeyError(v)

    def __len__(self) -> int:
        return len(self.classes)


def twin_classes(g: Graph, A) -> TwinClassPartition:
    m = _mask(A, g.n)
    groups: dict[int, list[int]] = {}
    for v in bits(m):
        groups.setdefault(g.adj[v], []).append(v)
    classes = sorted((frozenset(vs) for vs in groups.values()), key=min)
    return TwinClassPartition(tuple(classes))


@dataclass
class SymmetrizationResult:
    graph: Graph
    merges: int
    mode: str
    trace: list[tuple[int, int, int]] = field(default_factory=list)  # (absorbed, absorbing, edges after)


def symmetrize_trace(g: Graph, A, mode: str = "current") -> SymmetrizationResult:
    """Run Z(G|A) and keep the list of merges.

    Classes are kept as a list sorted by index. The non-adjacent pair (k, j), k < j,
    with the least k + j is merged (ties go to the smaller k). If j precedes k the
    members of A(j) are rewired to N(k); otherwise A(k) is rewired to N(j).
    ``mode="current"`` compares degrees in the graph being rewired, ``"frozen"``
    uses the degrees of the input graph throughout.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    adj = list(g.adj)
    frozen_deg = [m.bit_count() for m in g.adj]
    classes = {min(c): set(c) for c in twin_classes(g, A).classes}
    trace: list[tuple[int, int, int]] = []
    edges = g.edge_count
    while True:
        idx = sorted(classes)
        best = None
        for a_pos, k in enumerate(idx):
            if best is not None and 2 * k + 1 > best[0]:
                break
            for j in idx[a_pos + 1:]:
                if best is not None and k + j >= best[0]:
                    break
                if not adj[k] >> j & 1:
                    best = (k + j, k, j)
                    break
        if best is None:
            break
        _, k, j = best
        deg = frozen_deg if mode == "frozen" else [m.bit_count() for m in adj]
        if (deg[j], j) < (deg[k], k):
            absorbed, absorbing = j, k
        else:
            absorbed, absorbing = k, j
        for u in sorted(classes[absorbed]):
            before = adj[u].bit_count()
            _rewire(adj, u, absorbing)
            edges += adj[u].bit_count() - before
        merged = classes.pop(absorbed) | classes.pop(absorbing)
        classes[min(merged)] = merged
        trace.append((absorbed, absorbing, edges))
    return SymmetrizationResult(Graph(g.n, tuple(adj)), len(trace), mode, trace)


def symmetrize(g: Graph, A, mode: str = "current") -> Graph:
    """Z(G|A); see :func:`symmetrize_trace`."""
    return symmetrize_trace(g, A, mode).graph


def is_symmetric_on(g: Graph, A) -> bool:
    """Every two non-adjacent vertices of A have the same neighbourhood."""
    m = _mask(A, g.n)
    vs = list(bits(m))
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            if not g.adj[u] >> v & 1 and g.adj[u] != g.adj[v]:
                return False
    return True


def is_xyr_free(g: Graph, X, Y, r: int) -> bool:
    """No r-clique meets X in exactly one vertex and Y in exactly r - 1."""
    xm, ym = _mask(X, g.n), _mask(Y, g.n)
    if xm & ym:
        raise GraphError("X and Y must be disjoint")
    if r < 1:
        raise ValueError("r must be positive")
    for x in bits(xm):
        cand = g.adj[x] & ym
        if cand.bit_count() < r - 1:
            continue
        if g.n <= SMALL:
            if kernels.has_clique(list(g.adj), r - 1, cand):
                return False
        elif has_clique(induced(g, bits(cand)), r - 1):
            return False
    return True
