"""Order invariants of finite posets: chains, heights, down-equivalence."""

from __future__ import annotations

from dataclasses import dataclass

from .space import Poset, QuotientMap, _partition_by, bits


@dataclass(frozen=True)
class HeightProfile:
    height: tuple[int, ...]
    max_height: int


# Down-equivalence classes share the QuotientMap shape: a numbered partition.
DownEqPartition = QuotientMap


def covers(poset: Poset) -> list[list[int]]:
    """``covers(P)[y]`` lists the elements covered by ``y`` (Hasse diagram)."""
    out = []
    for y in range(poset.n):
        strict = poset.down[y] & ~(1 << y)
        below = bits(strict)
        out.append([x for x in below if not any(z != x and poset.down[z] >> x & 1 for z in below)])
    return out


def height(poset: Poset) -> HeightProfile:
    """Length of the longest chain ending at each element.

    Longest-path recurrence over the covering relation, processed in order of
    down-set size (a linear extension).
    """
    order = sorted(range(poset.n), key=lambda y: bin(poset.down[y]).count("1"))
    cov = covers(poset)
    h = [0] * poset.n
    for y in order:
        if cov[y]:
            h[y] = 1 + max(h[x] for x in cov[y])
    return HeightProfile(tuple(h), max(h, default=0))


def chains(poset: Poset) -> list[tuple[int, ...]]:
    """All nonempty chains as increasing tuples, in lexicographic order."""
    up = poset.up
    out = []

    def extend(ch):
        out.append(ch)
        top = ch[-1]
        for z in bits(up[top] & ~(1 << top)):
            extend(ch + (z,))

    for x in range(poset.n):
        extend((x,))
    return sorted(out)


def strict_down(poset: Poset, a: int) -> int:
    return poset.down[a] & ~(1 << a)


def down_equivalence(poset: Poset) -> DownEqPartition:
    return _partition_by([strict_down(poset, a) for a in range(poset.n)])
