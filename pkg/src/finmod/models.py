"""Small named spaces and posets used throughout the tests and CLI fixtures."""

from .space import FiniteSpace, Poset, order_topology, validate_topology


def chain(n: int) -> Poset:
    return Poset.from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset.from_relations(n, [])


def star(leaves: int) -> Poset:
    """Hub ``0`` below every leaf ``1..leaves``."""
    return Poset.from_relations(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circle4() -> Poset:
    """Minimal finite model of the circle: 0, 1 minimal; 2, 3 above both."""
    return Poset.from_relations(4, [(0, 2), (1, 2), (0, 3), (1, 3)])


def sphere(dim: int) -> Poset:
    """Iterated non-Hausdorff suspension of S^0: two points per height level."""
    pairs = []
    for level in range(1, dim + 1):
        for hi in (2 * level, 2 * level + 1):
            for lo in (2 * level - 2, 2 * level - 1):
                pairs.append((lo, hi))
    return Poset.from_relations(2 * dim + 2, pairs)


def sierpinski() -> FiniteSpace:
    return validate_topology(2, [[], [0], [0, 1]])


def indiscrete(n: int) -> FiniteSpace:
    return validate_topology(n, [[], list(range(n))])


def discrete(n: int) -> FiniteSpace:
    return order_topology(antichain(n))


def c3() -> FiniteSpace:
    """Indiscrete pair {0, 1} beside an isolated point 2."""
    return validate_topology(3, [[], [0, 1], [2], [0, 1, 2]])


def c3_padded() -> FiniteSpace:
    """``c3`` with an extra isolated point 3."""
    return validate_topology(
        4,
        [[], [0, 1], [2], [3], [0, 1, 2], [0, 1, 3], [2, 3], [0, 1, 2, 3]],
    )
