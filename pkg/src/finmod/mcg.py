"""Homeomorphism groups, the indistinguishability kernel and mapping class groups.

For a finite space X the mapping class group is computed as Homeo(X)/K,
where K is the group of homeomorphisms moving every point only inside its
indistinguishability class.  The quotient is represented faithfully by the
action of Homeo(X) on the classes, i.e. on the points of the T0 quotient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Sequence

from .automorphisms import automorphisms
from .errors import NotInKernel, SearchBoundExceeded
from .invariants import down_equivalence, height
from .perms import PermGroup, compose, identity, inverse
from .space import (
    FiniteSpace,
    QuotientMap,
    indistinguishability_classes,
    is_homeomorphism,
    order_topology,
    specialization_preorder,
    t0_quotient,
)

DEFAULT_MAX_POINTS = 12
DEFAULT_MAX_ORDER = 50_000


def _check_bound(space: FiniteSpace, max_points: int | None):
    if max_points is not None and space.n > max_points:
        raise SearchBoundExceeded(f"{space.n} points exceeds search bound {max_points}")


def _seed_colors(space: FiniteSpace) -> list[tuple[int, int, int]]:
    """(height, down-equivalence class size, indistinguishability class size) per point."""
    quotient, q = t0_quotient(space)
    hts = height(quotient).height
    deq = down_equivalence(quotient)
    return [
        (hts[c], len(deq.classes[deq.class_of[c]]), len(q.classes[c]))
        for c in q.class_of
    ]


def homeo_group(
    space: FiniteSpace,
    max_points: int | None = DEFAULT_MAX_POINTS,
    max_order: int = DEFAULT_MAX_ORDER,
) -> PermGroup:
    """All self-homeomorphisms, i.e. automorphisms of the specialization preorder."""
    _check_bound(space, max_points)
    pre = specialization_preorder(space)
    elems = automorphisms(pre, _seed_colors(space), max_order=max_order)
    return PermGroup.from_elements(space.n, elems)


def kernel_subgroup(
    space: FiniteSpace, max_points: int | None = DEFAULT_MAX_POINTS, max_order: int = DEFAULT_MAX_ORDER
) -> PermGroup:
    """Product of the symmetric groups on the indistinguishability classes."""
    _check_bound(space, max_points)
    q = indistinguishability_classes(space)
    size = 1
    for c in q.classes:
        for k in range(2, len(c) + 1):
            size *= k
    if size > max_order:
        raise SearchBoundExceeded(f"kernel order {size} exceeds bound {max_order}")
    elems = []
    for parts in product(*(permutations(c) for c in q.classes)):
        f = list(range(space.n))
        for cls, img in zip(q.classes, parts):
            for x, y in zip(cls, img):
                f[x] = y
        f = tuple(f)
        if not is_homeomorphism(f, space):
            raise AssertionError(f"kernel element {f} is not a homeomorphism")
        elems.append(f)
    return PermGroup.from_elements(space.n, elems)


def class_action(f: Sequence[int], q: QuotientMap) -> tuple[int, ...]:
    """Permutation of indistinguishability classes induced by ``f``."""
    return tuple(q.class_of[f[c[0]]] for c in q.classes)


def mod_group(
    space: FiniteSpace,
    max_points: int | None = DEFAULT_MAX_POINTS,
    max_order: int = DEFAULT_MAX_ORDER,
    homeo: PermGroup | None = None,
) -> PermGroup:
    """Mod(X) as the image of Homeo(X) acting on the T0 classes."""
    if homeo is None:
        homeo = homeo_group(space, max_points, max_order)
    q = indistinguishability_classes(space)
    return PermGroup.from_elements(len(q.classes), {class_action(f, q) for f in homeo.elements})


def weighted_t0_automorphisms(space: FiniteSpace) -> PermGroup:
    """Automorphisms of the T0 quotient preserving class sizes.

    Independent route to :func:`mod_group`: it never enumerates Homeo(X).
    """
    quotient, q = t0_quotient(space)
    return PermGroup.from_elements(quotient.n, automorphisms(quotient, q.weights))


@dataclass(frozen=True)
class IsotopyCertificate:
    """Elementary isotopies, one per nontrivially moved class.

    Each step ``(U, images)`` is the map sending ``U[i]`` to ``images[i]`` and
    fixing everything outside ``U``; it is isotopic to the identity relative
    to the complement of ``U`` through the two-piece schedule
    ``H(x, t) = x`` for ``t < 1`` and ``H(x, 1) = step(x)``.
    """

    n: int
    steps: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    target: tuple[int, ...]

    def step_map(self, i: int) -> tuple[int, ...]:
        f = list(range(self.n))
        for x, y in zip(*self.steps[i]):
            f[x] = y
        return tuple(f)

    def compose_steps(self) -> tuple[int, ...]:
        acc = identity(self.n)
        for i in range(len(self.steps)):
            acc = compose(self.step_map(i), acc)
        return acc

    def homotopy(self, i: int, t: float) -> tuple[int, ...]:
        """The ``i``-th elementary isotopy at time ``t`` in [0, 1]."""
        return self.step_map(i) if t >= 1 else identity(self.n)


def isotopy_certificate(space: FiniteSpace, f: Sequence[int]) -> IsotopyCertificate:
    q = indistinguishability_classes(space)
    f = tuple(f)
    if sorted(f) != list(range(space.n)):
        raise NotInKernel("map is not a bijection")
    steps = []
    for cls in q.classes:
        img = tuple(f[x] for x in cls)
        if any(q.class_of[y] != q.class_of[cls[0]] for y in img):
            raise NotInKernel(f"map moves a point of class {list(cls)} out of its class")
        if img != cls:
            steps.append((cls, img))
    return IsotopyCertificate(space.n, tuple(steps), f)


def validate_certificate(space: FiniteSpace, cert: IsotopyCertificate) -> bool:
    """Recompose the steps and check each is a homeomorphism supported on one class."""
    q = indistinguishability_classes(space)
    for i, (cls, img) in enumerate(cert.steps):
        if cls not in q.classes or sorted(img) != sorted(cls):
            return False
        g = cert.step_map(i)
        if not is_homeomorphism(g, space):
            return False
        # continuity of H on X x I reduces to every open set being g-invariant
        if any(_image(g, o) != o for o in space.open_sets()):
            return False
    return cert.compose_steps() == cert.target


def _image(g, mask):
    out = 0
    for x, y in enumerate(g):
        if mask >> x & 1:
            out |= 1 << y
    return out


@dataclass(frozen=True)
class Theorem1Report:
    mod_X: PermGroup
    aut_T0: PermGroup
    is_subgroup: bool
    isomorphic: bool
    witness: tuple[int, ...] | None
    weights: tuple[int, ...] = field(default=())


def theorem1_check(
    space: FiniteSpace, max_points: int | None = DEFAULT_MAX_POINTS, max_order: int = DEFAULT_MAX_ORDER
) -> Theorem1Report:
    """Compare Mod(X) with Homeo(T0(X)) (= Mod(T0(X)) for a finite poset)."""
    mod = mod_group(space, max_points, max_order)
    quotient, q = t0_quotient(space)
    aut = homeo_group(order_topology(quotient), max_points, max_order)
    sub = mod.is_subgroup_of(aut)
    witness = None
    if mod.order != aut.order:
        witness = next(g for g in aut.elements if g not in mod)
    return Theorem1Report(mod, aut, sub, mod.order == aut.order, witness, q.weights)


def conjugation_closed(big: PermGroup, small: PermGroup) -> bool:
    """Is ``small`` normal in ``big``?"""
    return all(
        compose(compose(h, k), inverse(h)) in small for h in big.generators or big.elements for k in small.elements
    )
