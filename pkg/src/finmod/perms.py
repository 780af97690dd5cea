"""Permutations as tuples and finite permutation groups listed element by element.

Composition convention everywhere: ``compose(f, g)[x] == f[g[x]]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import OrderBoundExceeded

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(f: Sequence[int], g: Sequence[int]) -> Perm:
    return tuple(f[x] for x in g)


def inverse(f: Sequence[int]) -> Perm:
    inv = [0] * len(f)
    for x, y in enumerate(f):
        inv[y] = x
    return tuple(inv)


def perm_order(f: Sequence[int]) -> int:
    seen = [False] * len(f)
    result = 1
    for i in range(len(f)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = f[j]
            length += 1
        result = result * length // gcd(result, length)
    return result


def cycles(f: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its smallest point."""
    seen = set()
    out = []
    for i in range(len(f)):
        if i in seen or f[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = f[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = f[j]
        out.append(tuple(cyc))
    return out


def closure(degree: int, gens: Iterable[Sequence[int]]) -> set[Perm]:
    gens = [tuple(g) for g in gens]
    e = identity(degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def greedy_generators(elements: Sequence[Perm], degree: int) -> tuple[Perm, ...]:
    """Scan elements in order, keeping each one not yet generated by the kept ones."""
    gens: list[Perm] = []
    span = {identity(degree)}
    for g in elements:
        if g not in span:
            gens.append(g)
            span = closure(degree, gens)
            if len(span) == len(elements):
                break
    return tuple(gens)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Sequence[int]]) -> "PermGroup":
        elems = tuple(sorted({tuple(e) for e in elements}))
        return cls(degree, elems, greedy_generators(elems, degree))

    @classmethod
    def generated_by(cls, degree: int, gens: Iterable[Sequence[int]]) -> "PermGroup":
        return cls.from_elements(degree, closure(degree, gens))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, f) -> bool:
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_set", s)
        return tuple(f) in s

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)

    def validate(self) -> None:
        """Raise ``AssertionError`` unless the element list is a group generated by ``generators``."""
        e = identity(self.degree)
        assert e in self, "missing identity"
        for g in self.elements:
            assert inverse(g) in self, f"missing inverse of {g}"
            for h in self.generators:
                assert compose(g, h) in self, "not closed"
        assert closure(self.degree, self.generators) == set(self.elements), "generators do not span"

    def order_profile(self) -> Counter:
        return Counter(perm_order(g) for g in self.elements)


def _homomorphism_from_images(g1: PermGroup, images: Sequence[Perm]) -> dict | None:
    """Extend generator images to a map on all of ``g1``; ``None`` if ill-defined or not injective."""
    e1, e2 = identity(g1.degree), identity(len(images[0]))
    phi = {e1: e2}
    used = {e2}
    frontier = [e1]
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for s, fs in zip(g1.generators, images):
                y = compose(x, s)
                fy = compose(fx, fs)
                if y in phi:
                    if phi[y] != fy:
                        return None
                else:
                    if fy in used:
                        return None
                    phi[y] = fy
                    used.add(fy)
                    nxt.append(y)
        frontier = nxt
    return phi


def find_isomorphism(g1: PermGroup, g2: PermGroup, max_order: int = 720) -> dict | None:
    if max(g1.order, g2.order) > max_order:
        raise OrderBoundExceeded(f"group order exceeds bound {max_order}")
    if g1.order != g2.order or g1.order_profile() != g2.order_profile():
        return None
    if not g1.generators:
        return {identity(g1.degree): identity(g2.degree)}
    by_order: dict[int, list[Perm]] = {}
    for h in g2.elements:
        by_order.setdefault(perm_order(h), []).append(h)
    candidates = [by_order.get(perm_order(s), []) for s in g1.generators]

    def search(i, chosen):
        if i == len(candidates):
            phi = _homomorphism_from_images(g1, chosen)
            if phi is not None and len(phi) == g2.order:
                return phi
            return None
        for h in candidates[i]:
            found = search(i + 1, chosen + [h])
            if found is not None:
                return found
        return None

    return search(0, [])


def group_iso(g1: PermGroup, g2: PermGroup, max_order: int = 720) -> bool:
    """True iff the two groups are abstractly isomorphic."""
    return find_isomorphism(g1, g2, max_order) is not None
