"""Automorphisms and canonical forms of finite preorders.

Individualize-and-refine search: colour refinement over strict down/up
neighbourhoods, then branch on the first smallest non-singleton cell.  Both
sides of the search are refined with the same deterministic relabelling, so
two partial colourings are compatible exactly when their refinement traces
agree.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import SearchBoundExceeded
from .space import Preorder, bits


class _Structure:
    def __init__(self, pre: Preorder):
        self.pre = pre
        self.n = pre.n
        up = pre.up
        self.below = [tuple(x for x in bits(pre.down[y]) if x != y) for y in range(pre.n)]
        self.above = [tuple(z for z in bits(up[y]) if z != y) for y in range(pre.n)]

    def refine(self, colors: Sequence[int]) -> tuple[list[int], tuple]:
        colors = list(colors)
        trace = []
        k = len(set(colors))
        while True:
            sigs = [
                (
                    colors[v],
                    tuple(sorted(colors[u] for u in self.below[v])),
                    tuple(sorted(colors[u] for u in self.above[v])),
                )
                for v in range(self.n)
            ]
            table = {s: i for i, s in enumerate(sorted(set(sigs)))}
            trace.append(tuple(sorted(sigs)))
            colors = [table[s] for s in sigs]
            if len(table) == k:
                return colors, tuple(trace)
            k = len(table)


def _normalize(colors: Sequence) -> list[int]:
    table = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [table[c] for c in colors]


def _individualize(colors: Sequence[int], x: int) -> list[int]:
    out = [2 * c for c in colors]
    out[x] += 1
    return out


def _target_cell(colors: Sequence[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def _is_automorphism(pre: Preorder, perm: Sequence[int]) -> bool:
    for y in range(pre.n):
        img = 0
        for x in bits(pre.down[y]):
            img |= 1 << perm[x]
        if img != pre.down[perm[y]]:
            return False
    return True


def iter_automorphisms(pre: Preorder, colors: Sequence | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every colour-preserving automorphism of ``pre`` exactly once."""
    st = _Structure(pre)
    start = _normalize(colors) if colors is not None else [0] * pre.n
    root, root_trace = st.refine(start)

    def search(ca, cb):
        cell = _target_cell(ca)
        if cell is None:
            where = {c: v for v, c in enumerate(cb)}
            perm = tuple(where[c] for c in ca)
            if _is_automorphism(pre, perm):
                yield perm
            return
        x = cell[0]
        color = ca[x]
        ra, ta = st.refine(_individualize(ca, x))
        for y in range(pre.n):
            if cb[y] != color:
                continue
            rb, tb = st.refine(_individualize(cb, y))
            if ta == tb:
                yield from search(ra, rb)

    yield from search(root, root)


def automorphisms(
    pre: Preorder, colors: Sequence | None = None, max_order: int | None = None
) -> list[tuple[int, ...]]:
    """Sorted list of all colour-preserving automorphisms."""
    out = []
    for g in iter_automorphisms(pre, colors):
        out.append(g)
        if max_order is not None and len(out) > max_order:
            raise SearchBoundExceeded(f"automorphism group larger than {max_order}")
    return sorted(out)


def canonical_form(pre: Preorder, colors: Sequence | None = None) -> tuple:
    """Isomorphism-invariant certificate: equal iff the (coloured) preorders are isomorphic.

    Minimum over every leaf of the refinement tree, so cost grows with the
    automorphism group; intended for small inputs.
    """
    st = _Structure(pre)
    base = list(colors) if colors is not None else [0] * pre.n
    start = _normalize(base)
    root, _ = st.refine(start)
    best = None

    def leaves(c):
        cell = _target_cell(c)
        if cell is None:
            yield c
            return
        for x in cell:
            r, _ = st.refine(_individualize(c, x))
            yield from leaves(r)

    for leaf in leaves(root):
        # leaf colours are 0..n-1 and give the relabelling directly
        cert = [0] * pre.n
        labels = [None] * pre.n
        for v in range(pre.n):
            m = 0
            for x in bits(pre.down[v]):
                m |= 1 << leaf[x]
            cert[leaf[v]] = m
            labels[leaf[v]] = base[v]
        key = (tuple(cert), tuple(labels))
        if best is None or key < best:
            best = key
    return (pre.n,) + (best if best is not None else ((), ()))
