"""Order complexes, face posets, Euler characteristic and mod-2 Betti numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import BoundExceeded
from .invariants import chains
from .space import Poset, mask_of

MAX_DIM = 4
MAX_FACES = 20_000


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    faces: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        fs = set(self.faces)
        if len(fs) != len(self.faces):
            raise ValueError("duplicate faces")
        covered = set()
        for f in self.faces:
            if not f or list(f) != sorted(set(f)):
                raise ValueError(f"face {f} must be a nonempty increasing tuple")
            covered.update(f)
            if len(f) > 1:
                for sub in combinations(f, len(f) - 1):
                    if sub not in fs:
                        raise ValueError(f"face {f} is missing its subface {sub}")
        if covered != set(range(self.vertex_count)):
            raise ValueError("every vertex must appear in some face")

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of ``faces``, stored by dimension then lexicographically."""
        out = set()
        for f in faces:
            f = tuple(sorted(set(f)))
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return cls(vertex_count, tuple(sorted(out, key=lambda f: (len(f), f))))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts


def order_complex(poset: Poset) -> SimplicialComplex:
    """Simplices are the nonempty chains."""
    return SimplicialComplex.from_faces(poset.n, chains(poset))


def face_poset(k: SimplicialComplex) -> Poset:
    """Nonempty faces ordered by inclusion, in the complex's face order."""
    masks = [mask_of(f) for f in k.faces]
    down = tuple(mask_of(j for j, m in enumerate(masks) if m & ~mi == 0) for mi in masks)
    return Poset(len(masks), down)


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** i * c for i, c in enumerate(k.f_vector()))


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as int bit-rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def boundary_rows(k: SimplicialComplex, d: int) -> list[int]:
    """Boundary map from d-faces to (d-1)-faces, one bit-row per d-face."""
    lower = {f: i for i, f in enumerate(f for f in k.faces if len(f) == d)}
    rows = []
    for f in k.faces:
        if len(f) == d + 1:
            rows.append(mask_of(lower[sub] for sub in combinations(f, d)))
    return rows


def betti_gf2(k: SimplicialComplex, max_dim: int = MAX_DIM, max_faces: int = MAX_FACES) -> tuple[int, ...]:
    if k.dim > max_dim:
        raise BoundExceeded(f"complex dimension {k.dim} exceeds bound {max_dim}")
    if len(k.faces) > max_faces:
        raise BoundExceeded(f"{len(k.faces)} faces exceeds bound {max_faces}")
    fv = k.f_vector()
    ranks = [0] + [gf2_rank(boundary_rows(k, d)) for d in range(1, k.dim + 1)] + [0]
    return tuple(fv[i] - ranks[i] - ranks[i + 1] for i in range(k.dim + 1))
