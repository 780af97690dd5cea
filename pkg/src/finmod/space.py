"""Finite topological spaces and their specialization preorders.

Points are the integers ``0..n-1`` and subsets are int bitmasks.  Open sets
are the *lower* sets of the specialization order: ``x <= y`` iff every open
set containing ``y`` also contains ``x``, so the minimal open set of ``y`` is
its down-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    MissingEmptyOrFull,
    NotAPoset,
    NotAPreorder,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)

# open-set families are materialized only up to this many points
MAX_EXPLICIT_POINTS = 16


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


@dataclass(frozen=True, eq=False)
class Preorder:
    """Reflexive, transitive relation; ``down[y]`` is the mask of all ``x <= y``.

    Equality is equality of relations, so a Poset equals the Preorder with the
    same down-sets.
    """

    n: int
    down: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, Preorder):
            return NotImplemented
        return self.n == other.n and self.down == other.down

    def __hash__(self):
        return hash((self.n, self.down))

    def __post_init__(self):
        if len(self.down) != self.n:
            raise NotAPreorder(f"expected {self.n} down-sets, got {len(self.down)}")
        full = (1 << self.n) - 1
        for y, d in enumerate(self.down):
            if d & ~full:
                raise NotAPreorder(f"down-set of {y} mentions points outside 0..{self.n - 1}")
            if not d >> y & 1:
                raise NotAPreorder(f"not reflexive at {y}")
            for x in bits(d):
                if self.down[x] & ~d:
                    raise NotAPreorder(f"not transitive: {x} <= {y} but down({x}) not in down({y})")
        self._check_extra()

    def _check_extra(self):
        pass

    @classmethod
    def from_relations(cls, n: int, pairs: Iterable[tuple[int, int]]):
        """Reflexive-transitive closure of the generating pairs ``(a, b)`` meaning ``a <= b``."""
        down = [1 << i for i in range(n)]
        for a, b in pairs:
            down[b] |= 1 << a
        changed = True
        while changed:
            changed = False
            for y in range(n):
                acc = down[y]
                for x in bits(down[y]):
                    acc |= down[x]
                if acc != down[y]:
                    down[y] = acc
                    changed = True
        return cls(n, tuple(down))

    @classmethod
    def from_matrix(cls, leq: Sequence[Sequence[bool]]):
        n = len(leq)
        return cls(n, tuple(mask_of(x for x in range(n) if leq[x][y]) for y in range(n)))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.down[y] >> x & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    @property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.n
        for y, d in enumerate(self.down):
            for x in bits(d):
                up[x] |= 1 << y
        return tuple(up)

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]

    def relations(self) -> list[tuple[int, int]]:
        """All strict pairs ``(x, y)`` with ``x <= y`` and ``x != y``."""
        return [(x, y) for y in range(self.n) for x in bits(self.down[y]) if x != y]

    def is_antisymmetric(self) -> bool:
        return all(
            not (self.down[x] >> y & 1) for y in range(self.n) for x in bits(self.down[y]) if x != y
        )

    def restrict(self, points: Sequence[int]):
        """Induced sub-relation on ``points``, relabelled densely in the given order."""
        index = {p: i for i, p in enumerate(points)}
        down = tuple(mask_of(index[x] for x in bits(self.down[p]) if x in index) for p in points)
        return type(self)(len(points), down)

    def relabel(self, perm: Sequence[int]):
        """Image of this relation under the point bijection ``x -> perm[x]``."""
        down = [0] * self.n
        for y in range(self.n):
            down[perm[y]] = mask_of(perm[x] for x in bits(self.down[y]))
        return type(self)(self.n, tuple(down))


class Poset(Preorder):
    def _check_extra(self):
        if not self.is_antisymmetric():
            raise NotAPoset("relation is not antisymmetric")


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``0..n-1``.

    ``opens`` is the sorted tuple of open-set masks, or ``None`` for spaces
    too large to materialize (the topology is then the lower sets of
    ``min_open``).
    """

    n: int
    opens: tuple[int, ...] | None
    min_open: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_open(self, mask: int) -> bool:
        if self.opens is not None:
            return mask in self._open_set
        return all(self.min_open[x] & ~mask == 0 for x in bits(mask))

    @property
    def _open_set(self) -> frozenset:
        cached = self.__dict__.get("_opens_cache")
        if cached is None:
            cached = frozenset(self.opens)
            object.__setattr__(self, "_opens_cache", cached)
        return cached

    def open_sets(self) -> tuple[int, ...]:
        if self.opens is not None:
            return self.opens
        return _lower_sets(self.n, self.min_open)


def validate_topology(n: int, opens: Iterable[Iterable[int] | int]) -> FiniteSpace:
    """Check the open-set axioms and build a :class:`FiniteSpace`.

    Opens may be given as masks or as iterables of points.
    """
    full = (1 << n) - 1
    family = set()
    for o in opens:
        m = o if isinstance(o, int) else mask_of(o)
        if m & ~full:
            raise ValueError(f"open set {bits(m)} is not a subset of 0..{n - 1}")
        family.add(m)
    if 0 not in family or full not in family:
        raise MissingEmptyOrFull("topology must contain the empty set and the full set")
    ordered = sorted(family)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a | b not in family:
                raise NotClosedUnderUnion(frozenset(bits(a)), frozenset(bits(b)))
            if a & b not in family:
                raise NotClosedUnderIntersection(frozenset(bits(a)), frozenset(bits(b)))
    min_open = []
    for x in range(n):
        acc = full
        for o in ordered:
            if o >> x & 1:
                acc &= o
        min_open.append(acc)
    return FiniteSpace(n, tuple(ordered), tuple(min_open))


def _lower_sets(n: int, down: Sequence[int]) -> tuple[int, ...]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for x in range(n):
                if not s >> x & 1:
                    t = s | down[x]
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return tuple(sorted(seen))


def space_from_preorder(pre: Preorder) -> FiniteSpace:
    opens = _lower_sets(pre.n, pre.down) if pre.n <= MAX_EXPLICIT_POINTS else None
    return FiniteSpace(pre.n, opens, tuple(pre.down))


def specialization_preorder(space: FiniteSpace) -> Preorder:
    return Preorder(space.n, space.min_open)


def order_topology(poset: Preorder) -> FiniteSpace:
    """Topology whose opens are the lower sets of ``poset``."""
    return space_from_preorder(poset)


def is_continuous(f: Sequence[int], dom: FiniteSpace, cod: FiniteSpace) -> bool:
    if len(f) != dom.n or any(not 0 <= y < cod.n for y in f):
        raise ValueError("map is not total from dom into cod")
    if cod.opens is None or dom.opens is None:
        # monotone w.r.t. specialization orders
        return all(cod.min_open[f[y]] >> f[x] & 1 for y in range(dom.n) for x in bits(dom.min_open[y]))
    for v in cod.opens:
        pre = mask_of(x for x in range(dom.n) if v >> f[x] & 1)
        if not dom.is_open(pre):
            return False
    return True


def is_homeomorphism(f: Sequence[int], space: FiniteSpace) -> bool:
    if sorted(f) != list(range(space.n)):
        return False
    inv = [0] * space.n
    for x, y in enumerate(f):
        inv[y] = x
    return is_continuous(f, space, space) and is_continuous(inv, space, space)


@dataclass(frozen=True)
class QuotientMap:
    """Partition into indistinguishability classes, numbered by smallest member."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @property
    def is_trivial(self) -> bool:
        return all(len(c) == 1 for c in self.classes)


def _partition_by(keys: Sequence) -> QuotientMap:
    first: dict = {}
    classes: list[list[int]] = []
    class_of = []
    for x, k in enumerate(keys):
        if k not in first:
            first[k] = len(classes)
            classes.append([])
        c = first[k]
        classes[c].append(x)
        class_of.append(c)
    return QuotientMap(tuple(tuple(c) for c in classes), tuple(class_of))


def indistinguishability_classes(space: FiniteSpace | Preorder) -> QuotientMap:
    keys = space.min_open if isinstance(space, FiniteSpace) else space.down
    return _partition_by(keys)


def is_t0(space: FiniteSpace) -> bool:
    return indistinguishability_classes(space).is_trivial


def t0_quotient(space: FiniteSpace | Preorder) -> tuple[Poset, QuotientMap]:
    q = indistinguishability_classes(space)
    down = space.min_open if isinstance(space, FiniteSpace) else space.down
    qdown = tuple(mask_of(q.class_of[x] for x in bits(down[c[0]])) for c in q.classes)
    return Poset(len(q.classes), qdown), q
