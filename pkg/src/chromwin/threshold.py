"""Chromatic-threshold classification of small graphs.

The value is one of (r-3)/(r-2), (2r-5)/(2r-3), (r-2)/(r-1) where r = chi(H):
r-near-acyclic graphs get the first, graphs with a forest in the decomposition
family the second, everything else the third.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algorithms import (
    InstanceTooLarge,
    chromatic_number,
    components,
    is_forest,
    is_independent,
    is_isomorphic,
    simple_cycles,
)
from .graph import Graph, GraphError, bits, induced, to_mask

FAMILY_CAP = 10
NEAR_ACYCLIC_CAP = 12
CYCLE_CAP = 10**6


def threshold_values(r: int) -> tuple[Fraction, Fraction, Fraction]:
    return Fraction(r - 3, r - 2), Fraction(2 * r - 5, 2 * r - 3), Fraction(r - 2, r - 1)


# ---------------------------------------------------------------- naming


def _component_name(g: Graph) -> str:
    n, m = g.n, g.edge_count
    degs = sorted(g.degrees())
    if m == n * (n - 1) // 2:
        return f"K{n}"
    if n >= 3 and m == n and degs == [2] * n:
        return f"C{n}"
    if m == n - 1:
        if degs[-1] <= 2:
            return f"P{n}"
        if degs[-1] == n - 1:
            return f"K1,{n - 1}"
        return f"T{n}"
    return f"G(n={n}, m={m})"


def describe(g: Graph) -> str:
    """Short name such as "K2", "C5", "P4", or "K2 + 2K1" for disjoint unions."""
    if g.n == 0:
        return "K0"
    names: dict[str, int] = {}
    for comp in components(g):
        name = _component_name(induced(g, bits(comp)))
        names[name] = names.get(name, 0) + 1
    parts = sorted(names.items(), key=lambda kv: (-_order_of(kv[0]), kv[0]))
    return " + ".join(name if c == 1 else f"{c}{name}" for name, c in parts)


def _order_of(name: str) -> int:
    digits = "".join(ch for ch in name.split(",")[0] if ch.isdigit())
    return int(digits) if digits else 0


# ---------------------------------------------------------------- decomposition family


def proper_colorings(h: Graph, r: int):
    """Partitions of V(H) into exactly r non-empty independent sets (as tuples of masks)."""
    n = h.n
    classes = [0] * r

    def rec(v: int, used: int):
        if n - v < r - used:
            return
        if v == n:
            yield tuple(sorted(classes[:used]))
            return
        bit = 1 << v
        for c in range(used):
            if not classes[c] & h.adj[v]:
                classes[c] |= bit
                yield from rec(v + 1, used)
                classes[c] ^= bit
        if used < r:
            classes[used] = bit
            yield from rec(v + 1, used + 1)
            classes[used] = 0

    yield from rec(0, 0)


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    vertices: tuple[int, ...]  # labels in H of the surviving vertices
    coloring: tuple[int, ...]  # the colouring (class masks) it came from


def decomposition_family(h: Graph, r: int | None = None) -> list[FamilyMember]:
    """Bipartite graphs left after deleting r - 2 colour classes of a proper r-colouring.

    Members are deduplicated up to isomorphism; each keeps the surviving vertex labels
    of its first occurrence.
    """
    if h.n > FAMILY_CAP:
        raise InstanceTooLarge(f"decomposition family capped at {FAMILY_CAP} vertices")
    if r is None:
        r = chromatic_number(h)
    if r < 3:
        raise GraphError("the decomposition family needs chromatic number at least 3")
    seen_masks: set[int] = set()
    members: list[FamilyMember] = []
    for coloring in proper_colorings(h, r):
        for a, b in combinations(coloring, 2):
            keep = a | b
            if keep in seen_masks:
                continue
            seen_masks.add(keep)
            g = induced(h, bits(keep))
            if any(is_isomorphic(g, m.graph) for m in members):
                continue
            members.append(FamilyMember(g, tuple(bits(keep)), coloring))
    return members


# ---------------------------------------------------------------- near-acyclicity


@dataclass(frozen=True)
class NearAcyclicWitness:
    """Deleted independent sets, then a forest F and an independent set S covering the rest."""

    deletions: tuple[frozenset[int], ...]
    forest: frozenset[int]
    independent: frozenset[int]


class _OddCycles:
    def __init__(self, h: Graph, cap: int):
        self.masks = [to_mask(c) for c in simple_cycles(h, cap) if len(c) % 2 == 1]

    def within(self, mask: int) -> list[int]:
        return [c for c in self.masks if c & ~mask == 0]


def _independent_subsets(h: Graph, mask: int, order: list[int]):
    """All independent subsets of ``mask`` (empty set first)."""
    vs = [v for v in order if mask >> v & 1]

    def rec(i: int, chosen: int):
        if i == len(vs):
            yield chosen
            return
        yield from rec(i + 1, chosen)
        v = vs[i]
        if not h.adj[v] & chosen:
            yield from rec(i + 1, chosen | (1 << v))

    yield from rec(0, 0)


class _NearAcyclicSearch:
    def __init__(self, h: Graph, order_seed: int | None, cycle_cap: int):
        self.h = h
        self.order = list(range(h.n))
        if order_seed is not None:
            random.Random(order_seed).shuffle(self.order)
        self.cycles = _OddCycles(h, cycle_cap)
        self.base: dict[int, tuple[int, int] | None] = {}
        self.memo: dict[tuple[int, int], tuple[int, ...] | None] = {}

    def partition(self, mask: int) -> tuple[int, int] | None:
        """(forest, S) for H[mask], or None."""
        if mask in self.base:
            return self.base[mask]
        cyc = self.cycles.within(mask)
        found = None
        for S in _independent_subsets(self.h, mask, self.order):
            if any((c & S).bit_count() < 2 for c in cyc):
                continue
            rest = mask & ~S
            if is_forest(induced(self.h, bits(rest))):
                found = (rest, S)
                break
        self.base[mask] = found
        return found

    def deletions(self, mask: int, steps: int) -> tuple[int, ...] | None:
        key = (mask, steps)
        if key in self.memo:
            return self.memo[key]
        result = None
        if steps == 0:
            if self.partition(mask) is not None:
                result = ()
        else:
            for I in _independent_subsets(self.h, mask, self.order):
                sub = self.deletions(mask & ~I, steps - 1)
                if sub is not None:
                    result = (I,) + sub
                    break
        self.memo[key] = result
        return result


def _witness(search: _NearAcyclicSearch, dels: tuple[int, ...]) -> NearAcyclicWitness:
    rest = search.h.full_mask
    for I in dels:
        rest &= ~I
    forest, S = search.partition(rest)
    return NearAcyclicWitness(tuple(frozenset(bits(I)) for I in dels), frozenset(bits(forest)), frozenset(bits(S)))


def is_near_acyclic(h: Graph, order_seed: int | None = None, cycle_cap: int = CYCLE_CAP,
                    check_chi: bool = True) -> tuple[bool, NearAcyclicWitness | None]:
    """3-chromatic H split into a forest and an independent S meeting every odd cycle twice."""
    if h.n > NEAR_ACYCLIC_CAP:
        raise InstanceTooLarge(f"near-acyclic search capped at {NEAR_ACYCLIC_CAP} vertices")
    if check_chi and chromatic_number(h) != 3:
        raise GraphError("near-acyclicity is defined for 3-chromatic graphs")
    search = _NearAcyclicSearch(h, order_seed, cycle_cap)
    if search.partition(h.full_mask) is None:
        return False, None
    return True, _witness(search, ())


def is_r_near_acyclic(h: Graph, r: int, order_seed: int | None = None, cycle_cap: int = CYCLE_CAP,
                      check_chi: bool = True) -> tuple[bool, NearAcyclicWitness | None]:
    """Can r - 3 independent sets be deleted so that what is left is near-acyclic?"""
    if h.n > NEAR_ACYCLIC_CAP:
        raise InstanceTooLarge(f"near-acyclic search capped at {NEAR_ACYCLIC_CAP} vertices")
    if r < 3:
        raise GraphError("r must be at least 3")
    if check_chi and chromatic_number(h) != r:
        raise GraphError(f"H does not have chromatic number {r}")
    search = _NearAcyclicSearch(h, order_seed, cycle_cap)
    dels = search.deletions(h.full_mask, r - 3)
    if dels is None:
        return False, None
    return True, _witness(search, dels)


def check_near_acyclic_witness(h: Graph, r: int, w: NearAcyclicWitness) -> bool:
    """Independent re-check of a witness against the definitions."""
    if len(w.deletions) != r - 3:
        return False
    removed = 0
    for I in w.deletions:
        m = to_mask(I)
        if m & removed or not is_independent(h, m):
            return False
        removed |= m
    F, S = to_mask(w.forest), to_mask(w.independent)
    if F & S or (F | S | removed) != h.full_mask or F & removed or S & removed:
        return False
    if not is_independent(h, S) or not is_forest(induced(h, w.forest)):
        return False
    rest = induced(h, sorted(w.forest | w.independent))
    labels = sorted(w.forest | w.independent)
    for cyc in simple_cycles(rest):
        if len(cyc) % 2 and sum(labels[v] in w.independent for v in cyc) < 2:
            return False
    return True


# ---------------------------------------------------------------- classification


@dataclass
class ThresholdClass:
    r: int
    value: Fraction
    kind: str  # "near-acyclic", "forest", "none"
    near_acyclic: NearAcyclicWitness | None = None
    forest: FamilyMember | None = None
    family_size: int = 0
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        head = f"chi={self.r}, delta_chi={self.value}"
        if self.kind == "near-acyclic":
            w = self.near_acyclic
            dels = " ".join("{" + ",".join(map(str, sorted(I))) + "}" for I in w.deletions) or "none"
            return (f"{head}, witness={self.r}-near-acyclic: delete {dels}; "
                    f"forest {{{','.join(map(str, sorted(w.forest)))}}}, "
                    f"S={{{','.join(map(str, sorted(w.independent)))}}}")
        if self.kind == "forest":
            return (f"{head}, witness=forest {describe(self.forest.graph)} in decomposition family; "
                    f"not {self.r}-near-acyclic")
        return f"{head}, witness=no forest in decomposition family"

    def to_dict(self) -> dict:
        out = {"r": self.r, "value": str(self.value), "kind": self.kind, "family_size": self.family_size}
        if self.near_acyclic:
            out["deletions"] = [sorted(I) for I in self.near_acyclic.deletions]
            out["forest"] = sorted(self.near_acyclic.forest)
            out["independent"] = sorted(self.near_acyclic.independent)
        if self.forest:
            out["forest_member"] = {"vertices": list(self.forest.vertices),
                                    "edges": [[self.forest.vertices[i], self.forest.vertices[j]]
                                              for i, j in self.forest.graph.edges()],
                                    "name": describe(self.forest.graph)}
        return out


def chromatic_threshold(h: Graph, order_seed: int | None = None) -> ThresholdClass:
    r = chromatic_number(h)
    if r < 3:
        raise GraphError("classification needs chromatic number at least 3")
    low, mid, high = threshold_values(r)
    ok, w = is_r_near_acyclic(h, r, order_seed, check_chi=False)
    if ok:
        return ThresholdClass(r, low, "near-acyclic", near_acyclic=w)
    family = decomposition_family(h, r)
    for m in family:
        if is_forest(m.graph):
            return ThresholdClass(r, mid, "forest", forest=m, family_size=len(family))
    return ThresholdClass(r, high, "none", family_size=len(family))


def verify_classification(h: Graph, tc: ThresholdClass) -> bool:
    """Re-check the value against the trichotomy and the witness against the definitions."""
    if tc.value not in threshold_values(tc.r) or chromatic_number(h) != tc.r:
        return False
    if tc.kind == "near-acyclic":
        return tc.value == threshold_values(tc.r)[0] and check_near_acyclic_witness(h, tc.r, tc.near_acyclic)
    if tc.kind == "forest":
        m = tc.forest
        sub = induced(h, m.vertices)
        kept = to_mask(m.vertices)
        classes_ok = (sorted(m.coloring) == sorted(set(m.coloring))
                      and all(is_independent(h, c) for c in m.coloring)
                      and sum(c.bit_count() for c in m.coloring) == h.n
                      and sum(1 for c in m.coloring if c & kept) == 2
                      and all(c & kept in (0, c) for c in m.coloring))
        return (tc.value == threshold_values(tc.r)[1] and classes_ok and sub == m.graph
                and is_forest(sub) and chromatic_number(sub) <= 2 and len(m.coloring) == tc.r)
    return tc.value == threshold_values(tc.r)[2] and not any(is_forest(m.graph) for m in decomposition_family(h, tc.r))
