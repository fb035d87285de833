"""Immutable simple graphs on vertices 0..n-1 stored as neighbourhood bitmasks."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, bad partitions)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``adj[v]`` is an integer whose bit ``w`` is set iff ``v`` and ``w`` are
    adjacent. Instances are hashable values; every operation returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if m >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for w in bits(m):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [0] * self.n
        for v, m in enumerate(self.adj):
            new[perm[v]] = to_mask(perm[w] for w in bits(m))
        return Graph(self.n, tuple(new))

    def to_edge_list_text(self) -> str:
        es = self.edges()
        lines = [f"{self.n} {len(es)}"] + [f"{u} {v}" for u, v in es]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered pairs; duplicates are merged."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines edge-list format."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"bad edge list: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return graph_from_edges(n, pairs)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        adj.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(adj))


def turan_part_sizes(r: int, n: int) -> list[int]:
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(r: int, n: int) -> Graph:
    """Complete r-partite graph on n vertices with balanced parts."""
    if r < 1 or n < 0:
        raise GraphError("turan_graph needs r >= 1 and n >= 0")
    return complete_multipartite(turan_part_sizes(r, n))


def turan_edge_count(r: int, n: int) -> int:
    """e(T_r(n)) = (n^2 - sum s_i^2) / 2; T_0(0) is the empty graph."""
    if n == 0:
        return 0
    if r < 1:
        raise GraphError("r must be positive when n > 0")
    return (n * n - sum(s * s for s in turan_part_sizes(r, n))) // 2


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` (shifted by |g|) plus every cross edge."""
    n = g.n + h.n
    gmask = g.full_mask
    hmask = h.full_mask << g.n
    adj = [m | hmask for m in g.adj] + [(m << g.n) | gmask for m in h.adj]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.adj + tuple(m << g.n for m in h.adj))


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabelled 0..|S|-1 in increasing order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(vs)}
    keep = to_mask(vs)
    adj = tuple(to_mask(pos[w] for w in bits(g.adj[v] & keep)) for v in vs)
    return Graph(len(vs), adj)


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced(g, [v for v in range(g.n) if v not in drop])


def edges_within(g: Graph, mask: int) -> int:
    return sum((g.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def grotzsch_graph() -> Graph:
    """Mycielskian of C5: 11 vertices, 20 edges, triangle-free, chromatic number 4."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        edges += [(5 + i, (i - 1) % 5), (5 + i, (i + 1) % 5), (5 + i, 10)]
    return graph_from_edges(11, edges)


NAMED_GRAPHS = {
    "c5": lambda: cycle_graph(5),
    "petersen": petersen_graph,
    "grotzsch": grotzsch_graph,
}


@dataclass(frozen=True)
class RolePartition:
    """Named, pairwise-disjoint vertex sets (X, Y1, Z, Uprime, ...)."""

    roles: Mapping[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for name, vs in self.roles.items():
            if seen & vs:
                raise GraphError(f"role {name!r} overlaps another role")
            seen |= vs

    def validate(self, n: int) -> None:
        for name, vs in self.roles.items():
            bad = [v for v in vs if not 0 <= v < n]
            if bad:
                raise GraphError(f"role {name!r} references vertices {bad} outside 0..{n - 1}")

    def __getitem__(self, name: str) -> frozenset[int]:
        return self.roles[name]

    def mask(self, name: str) -> int:
        return to_mask(self.roles[name])

    def sizes(self) -> dict[str, int]:
        return {k: len(v) for k, v in self.roles.items()}

    def covered(self) -> frozenset[int]:
        out: set[int] = set()
        for vs in self.roles.values():
            out |= vs
        return frozenset(out)


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 upper-triangle order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(n) for i in range(j)]


def graph_from_code(n: int, code: int) -> Graph:
    """Graph whose edge set is given by the bits of ``code`` over :func:`pair_list`."""
    adj = [0] * n
    for k, (i, j) in enumerate(pair_list(n)):
        if code >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def graph_code(g: Graph) -> int:
    code = 0
    for k, (i, j) in enumerate(pair_list(g.n)):
        if g.adj[i] >> j & 1:
            code |= 1 << k
    return code


def all_pairs(vertices: Iterable[int]) -> Iterator[tuple[int, int]]:
    return combinations(sorted(vertices), 2)
