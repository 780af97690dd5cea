"""Exhaustive enumeration of small topologies and the Mod(X) vs Mod(T0(X)) sweep."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .automorphisms import canonical_form
from .errors import BoundExceeded, MissingEmptyOrFull, NotClosedUnderIntersection, NotClosedUnderUnion
from .mcg import (
    Theorem1Report,
    conjugation_closed,
    homeo_group,
    isotopy_certificate,
    kernel_subgroup,
    theorem1_check,
    validate_certificate,
)
from .space import FiniteSpace, Poset, Preorder, bits, is_t0, space_from_preorder, validate_topology

MAX_LABELED = 4
MAX_T0 = 5


def _extensions(pre_down: tuple[int, ...], n: int, t0_only: bool) -> Iterator[tuple[int, ...]]:
    """Ways to add point ``n`` to a preorder on ``0..n-1``.

    The new point gets a down-closed set D below it and an up-closed set U
    above it, with every element of D below every element of U.
    """
    up = [0] * n
    for y in range(n):
        for x in bits(pre_down[y]):
            up[x] |= 1 << y
    lowers = [m for m in range(1 << n) if all(pre_down[x] & ~m == 0 for x in bits(m))]
    uppers = [m for m in range(1 << n) if all(up[x] & ~m == 0 for x in bits(m))]
    for D in lowers:
        for U in uppers:
            if t0_only and D & U:
                continue
            if any(pre_down[u] & D != D for u in bits(U)):
                continue
            down = [d | (1 << n) if U >> y & 1 else d for y, d in enumerate(pre_down)]
            down.append(D | (1 << n))
            yield tuple(down)


def enumerate_preorders(n: int, t0_only: bool = False) -> Iterator[Preorder]:
    """Every labeled preorder (or partial order) on ``n`` points, exactly once."""
    level = [()]
    for k in range(n):
        level = [ext for d in level for ext in _extensions(d, k, t0_only)]
    for d in level:
        yield Preorder(n, d)


def _family_filter(n: int) -> Iterator[FiniteSpace]:
    full = (1 << n) - 1
    middle = list(range(1, full))
    for choice in range(1 << len(middle)):
        opens = [0, full] + [m for i, m in enumerate(middle) if choice >> i & 1]
        if n == 0:
            opens = [0]
        try:
            yield validate_topology(n, opens)
        except (MissingEmptyOrFull, NotClosedUnderUnion, NotClosedUnderIntersection):
            continue
        if n == 0:
            return


def enumerate_topologies(n: int, t0_only: bool = False, method: str = "preorder") -> Iterator[FiniteSpace]:
    """Every labeled topology on ``n`` points.

    ``method="preorder"`` builds them from preorders (n <= 4, or n <= 5 with
    ``t0_only``); ``method="family"`` filters all subset families through the
    open-set axioms (n <= 4).
    """
    limit = MAX_T0 if t0_only and method == "preorder" else MAX_LABELED
    if n > limit:
        raise BoundExceeded(f"labeled enumeration limited to n <= {limit}")
    if method == "preorder":
        for pre in enumerate_preorders(n, t0_only):
            yield space_from_preorder(pre)
    elif method == "family":
        for sp in _family_filter(n):
            if not t0_only or is_t0(sp):
                yield sp
    else:
        raise ValueError(f"unknown method {method!r}")


def count_unlabeled(n: int, t0_only: bool = False) -> int:
    """Topologies up to homeomorphism, by canonical-form deduplication."""
    return len({canonical_form(Preorder(sp.n, sp.min_open)) for sp in enumerate_topologies(n, t0_only)})


@dataclass
class SpaceCheck:
    t0: bool
    report: Theorem1Report
    homeo_order: int
    kernel_order: int
    order_identity: bool
    kernel_normal: bool
    certificates_ok: bool


def check_space(space: FiniteSpace) -> SpaceCheck:
    """Mod(X) vs Homeo(T0(X)) comparison plus the unconditional invariants for one space."""
    homeo = homeo_group(space)
    kernel = kernel_subgroup(space)
    report = theorem1_check(space)
    certs = all(validate_certificate(space, isotopy_certificate(space, k)) for k in kernel.elements)
    return SpaceCheck(
        t0=is_t0(space),
        report=report,
        homeo_order=homeo.order,
        kernel_order=kernel.order,
        order_identity=homeo.order == kernel.order * report.mod_X.order,
        kernel_normal=kernel.is_subgroup_of(homeo) and conjugation_closed(homeo, kernel),
        certificates_ok=certs,
    )


@dataclass
class SweepReport:
    n: int
    total_spaces: int = 0
    t0_count: int = 0
    iso_holds: int = 0
    iso_fails: int = 0
    invariant_violations: int = 0
    fail_witnesses: list[tuple[FiniteSpace, Theorem1Report]] = field(default_factory=list)


def sweep_theorem1(n: int, workers: int = 1, witness_cap: int = 10) -> SweepReport:
    if n > MAX_LABELED:
        raise BoundExceeded(f"sweep limited to n <= {MAX_LABELED}")
    spaces = list(enumerate_topologies(n))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            checks = list(pool.map(check_space, spaces, chunksize=16))
    else:
        checks = [check_space(sp) for sp in spaces]
    rep = SweepReport(n)
    for sp, c in zip(spaces, checks):
        rep.total_spaces += 1
        rep.t0_count += c.t0
        ok = c.order_identity and c.kernel_normal and c.certificates_ok and c.report.is_subgroup
        if c.t0 and not c.report.isomorphic:
            ok = False
        rep.invariant_violations += not ok
        if c.report.isomorphic:
            rep.iso_holds += 1
        else:
            rep.iso_fails += 1
            if len(rep.fail_witnesses) < witness_cap:
                rep.fail_witnesses.append((sp, c.report))
    return rep


def unlabeled_posets(n: int) -> list[Poset]:
    """One representative per isomorphism class of posets on ``n`` points.

    Every poset is built by adding points in a linear-extension order, so it
    suffices to add each new point as a maximal element above a lower set.
    """
    level = {canonical_form(Poset(0, ())): Poset(0, ())}
    for k in range(n):
        nxt = {}
        for p in level.values():
            for D in _lower_masks(p):
                q = Poset(k + 1, p.down + (D | 1 << k,))
                nxt.setdefault(canonical_form(q), q)
        level = nxt
    return [level[key] for key in sorted(level)]


def _lower_masks(p: Preorder) -> list[int]:
    return [m for m in range(1 << p.n) if all(p.down[x] & ~m == 0 for x in bits(m))]
