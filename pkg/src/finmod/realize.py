"""Realize a finite group as the mapping class group of a finite T0 space.

Pipeline: Cayley colour digraph -> Frucht-style gadget graph -> vertex/edge
incidence poset.  Automorphisms of the poset are its homeomorphisms, which
for a finite poset are exactly its mapping classes.

Also: beat points and cores (homotopy reductions of finite posets).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AmbiguousIncidence,
    DegenerateInput,
    IsolatedVertex,
    NotAGroup,
    OrderBoundExceeded,
    VerificationFailed,
)
from .mcg import homeo_group
from .perms import PermGroup, closure, compose, group_iso, identity
from .space import Poset, bits, mask_of, order_topology


@dataclass(frozen=True)
class GroupSpec:
    """Multiplication table over indices ``0..order-1``; ``table[a][b] = a*b``, identity 0."""

    order: int
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...] | None = None

    def __post_init__(self):
        k = self.order
        t = self.table
        if k < 1 or len(t) != k or any(len(row) != k for row in t):
            raise NotAGroup("table must be order x order")
        idx = set(range(k))
        for a in range(k):
            if set(t[a]) != idx or {t[b][a] for b in range(k)} != idx:
                raise NotAGroup(f"row/column {a} is not a permutation of the elements")
            if t[0][a] != a or t[a][0] != a:
                raise NotAGroup("index 0 is not the identity")
        for a in range(k):
            for b in range(k):
                ab = t[a][b]
                for c in range(k):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise NotAGroup(f"not associative at ({a}, {b}, {c})")
        if self.generators is not None:
            if any(not 0 <= g < k for g in self.generators):
                raise NotAGroup("generator index out of range")
            if len(_span(self.table, self.generators)) != k:
                raise NotAGroup("given generators do not generate the group")

    @classmethod
    def from_perms(cls, degree: int, gens: Sequence[Sequence[int]]) -> "GroupSpec":
        """Multiplication table of the permutation group generated by ``gens``."""
        elems = sorted(closure(degree, gens))
        index = {g: i for i, g in enumerate(elems)}
        # identity sorts first
        table = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
        return cls(len(elems), table, tuple(index[tuple(g)] for g in gens if tuple(g) != identity(degree)) or None)

    def inverse(self, a: int) -> int:
        return self.table[a].index(0)

    def small_generators(self) -> tuple[int, ...]:
        """Greedy generating set: repeatedly add the element enlarging the span most."""
        if self.generators is not None:
            return self.generators
        gens: list[int] = []
        span = {0}
        while len(span) < self.order:
            best = max(
                (g for g in range(1, self.order) if g not in span),
                key=lambda g: (len(_span(self.table, gens + [g])), -g),
            )
            gens.append(best)
            span = _span(self.table, gens)
        return tuple(gens)


def _span(table, gens) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = table[a][s]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def regular_representation(g: GroupSpec) -> PermGroup:
    """Left-regular permutation group: ``a`` acts as ``x -> a*x``."""
    return PermGroup.from_elements(g.order, [tuple(g.table[a][x] for x in range(g.order)) for a in range(g.order)])


def cyclic(k: int) -> GroupSpec:
    return GroupSpec(k, tuple(tuple((a + b) % k for b in range(k)) for a in range(k)))


def klein4() -> GroupSpec:
    return GroupSpec(4, tuple(tuple(a ^ b for b in range(4)) for a in range(4)))


def symmetric(d: int) -> GroupSpec:
    if d < 2:
        return cyclic(1)
    swap = (1, 0) + tuple(range(2, d))
    rot = tuple(range(1, d)) + (0,)
    return GroupSpec.from_perms(d, [swap, rot])


def dihedral(m: int) -> GroupSpec:
    """Symmetries of the m-gon, order 2m."""
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return GroupSpec.from_perms(m, [rot, ref])


BUILTIN_GROUPS = {
    "trivial": lambda: cyclic(1),
    "klein4": klein4,
    "V4": klein4,
    "S3": lambda: symmetric(3),
    "S4": lambda: symmetric(4),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "D6": lambda: dihedral(6),
}


def builtin_group(name: str) -> GroupSpec:
    if name in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[name]()
    if name[:1] == "C" and name[1:].isdigit():
        return cyclic(int(name[1:]))
    raise KeyError(name)


@dataclass(frozen=True)
class ColoredDigraph:
    vertex_count: int
    arcs: tuple[tuple[int, int, int], ...]
    colors: int


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    provenance: str = "frucht"

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise AmbiguousIncidence(f"parallel edge {e}")
            seen.add(e)


def cayley_graph(g: GroupSpec, generators: Sequence[int] | None = None) -> ColoredDigraph:
    if generators is None:
        generators = g.generators if g.generators is not None else tuple(range(1, g.order))
    gens = [s for s in generators if s != 0]
    arcs = tuple((a, g.table[a][s], c) for c, s in enumerate(gens) for a in range(g.order))
    return ColoredDigraph(g.order, tuple(sorted(arcs, key=lambda t: (t[2], t[0]))), len(gens))


# smallest asymmetric graph with no isolated vertex (6 vertices, 6 edges)
ASYMMETRIC6 = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5))


def frucht_graph(d: ColoredDigraph) -> SimpleGraph:
    """Replace every arc of colour ``k`` by an asymmetric, colour-labelled gadget.

    Arc ``u -> v`` becomes the path ``u - s - t - v``; ``s`` carries a pendant
    path of length ``2k+1`` and ``t`` one of length ``2k+2``.
    """
    if d.vertex_count < 1:
        raise DegenerateInput("empty digraph")
    if d.vertex_count == 1:
        return SimpleGraph(6, ASYMMETRIC6, "special:trivial-group")
    if d.vertex_count == 2:
        return SimpleGraph(3, ((0, 1), (1, 2)), "special:order-2")
    if not d.arcs:
        raise DegenerateInput("digraph has no arcs")
    edges = []
    nxt = d.vertex_count

    def new():
        nonlocal nxt
        nxt += 1
        return nxt - 1

    def tail(root, length):
        prev = root
        for _ in range(length):
            w = new()
            edges.append((prev, w))
            prev = w

    for u, v, k in d.arcs:
        if u == v:
            raise DegenerateInput(f"self-loop at {u}")
        s, t = new(), new()
        edges.extend([(u, s), (s, t), (t, v)])
        tail(s, 2 * k + 1)
        tail(t, 2 * k + 2)
    return SimpleGraph(nxt, tuple(edges))


def incidence_poset(g: SimpleGraph) -> Poset:
    """Vertices (height 0) below the edges (height 1) containing them."""
    if len(g.edges) < 2:
        raise DegenerateInput("incidence poset needs at least 2 edges")
    touched = set()
    for u, v in g.edges:
        touched.update((u, v))
    missing = set(range(g.vertex_count)) - touched
    if missing:
        raise IsolatedVertex(f"isolated vertices {sorted(missing)}")
    V = g.vertex_count
    pairs = []
    for i, (u, v) in enumerate(g.edges):
        pairs += [(u, V + i), (v, V + i)]
    return Poset.from_relations(V + len(g.edges), pairs)


def realize_group(g: GroupSpec, max_order: int = 24, verify: bool = True) -> Poset:
    """Finite poset whose homeomorphism (= mapping class) group is isomorphic to ``g``."""
    if g.order > max_order:
        raise OrderBoundExceeded(f"group order {g.order} exceeds bound {max_order}")
    if g.order == 1:
        result = Poset.from_relations(2, [(0, 1)])
    elif g.order == 2:
        result = Poset.from_relations(2, [])
    else:
        result = incidence_poset(frucht_graph(cayley_graph(g, g.small_generators())))
    if verify:
        homeo = homeo_group(order_topology(result), max_points=None, max_order=max(max_order, g.order))
        if not group_iso(homeo, regular_representation(g)):
            raise VerificationFailed(f"realized poset has homeomorphism group of order {homeo.order}")
    return result


def is_beat_point(poset: Poset, a: int) -> bool:
    """Strict down-set has a maximum, or strict up-set has a minimum."""
    below = poset.down[a] & ~(1 << a)
    if below and any(poset.down[m] == below for m in bits(below)):
        return True
    up = poset.up
    above = up[a] & ~(1 << a)
    return bool(above) and any(up[m] == above for m in bits(above))


def core_points(poset: Poset) -> list[int]:
    """Surviving original elements after removing lowest-index beat points one at a time."""
    alive = list(range(poset.n))
    while True:
        sub = poset.restrict(alive)
        for i in range(sub.n):
            if is_beat_point(sub, i):
                del alive[i]
                break
        else:
            return alive


def core(poset: Poset) -> Poset:
    return poset.restrict(core_points(poset))


def all_cores(poset: Poset) -> set:
    """Canonical forms of the cores reachable by every beat-point removal order."""
    from .automorphisms import canonical_form

    results = set()
    seen = set()

    def walk(alive_mask):
        if alive_mask in seen:
            return
        seen.add(alive_mask)
        alive = bits(alive_mask)
        sub = poset.restrict(alive)
        beats = [i for i in range(sub.n) if is_beat_point(sub, i)]
        if not beats:
            results.add(canonical_form(sub))
        for i in beats:
            walk(alive_mask & ~(1 << alive[i]))

    walk(mask_of(range(poset.n)))
    return results
