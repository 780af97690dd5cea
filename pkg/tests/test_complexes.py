import pytest
from hypothesis import given, settings
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from finmod import models
from finmod.automorphisms import automorphisms
from finmod.complexes import (
    SimplicialComplex,
    betti_gf2,
    boundary_rows,
    euler_characteristic,
    face_poset,
    gf2_rank,
    order_complex,
)
from finmod.errors import BoundExceeded
from finmod.invariants import chains, height

from oracles import posets


def sympy_betti(k: SimplicialComplex):
    """Betti numbers from sympy's GF(2) rank, with dense 0/1 boundary matrices."""
    fv = k.f_vector()
    ranks = [0]
    for d in range(1, k.dim + 1):
        cols = fv[d - 1]
        rows = [[r >> j & 1 for j in range(cols)] for r in boundary_rows(k, d)]
        dm = DomainMatrix.from_Matrix(Matrix(rows)).convert_to(GF(2))
        ranks.append(dm.rank())
    ranks.append(0)
    return tuple(fv[i] - ranks[i] - ranks[i + 1] for i in range(k.dim + 1))


def test_order_complex_examples():
    k = order_complex(models.chain(3))
    assert len(k.faces) == 7 and k.dim == 2
    k = order_complex(models.antichain(3))
    assert k.faces == ((0,), (1,), (2,))
    k = order_complex(models.circle4())
    assert k.f_vector() == [4, 4]
    assert sorted(f for f in k.faces if len(f) == 2) == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_face_poset_examples():
    edge = SimplicialComplex.from_faces(2, [(0, 1)])
    fp = face_poset(edge)
    assert fp.n == 3 and height(fp).height == (0, 0, 1)
    tri = SimplicialComplex.from_faces(3, [(0, 1), (1, 2), (0, 2)])
    assert face_poset(tri).n == 6
    assert len(automorphisms(face_poset(tri))) == 6
    assert face_poset(SimplicialComplex.from_faces(1, [(0,)])).n == 1


def test_euler_examples():
    assert euler_characteristic(order_complex(models.chain(3))) == 1
    assert euler_characteristic(order_complex(models.circle4())) == 0
    k = order_complex(models.sphere(2))
    assert k.f_vector() == [6, 12, 8]
    assert euler_characteristic(k) == 2


def test_betti_examples():
    assert betti_gf2(order_complex(models.chain(3))) == (1, 0, 0)
    assert betti_gf2(order_complex(models.circle4())) == (1, 1)
    assert betti_gf2(order_complex(models.sphere(2))) == (1, 0, 1)
    assert betti_gf2(order_complex(models.sphere(3))) == (1, 0, 0, 1)


def test_betti_bounds():
    k = order_complex(models.chain(6))
    with pytest.raises(BoundExceeded):
        betti_gf2(k)
    with pytest.raises(BoundExceeded):
        betti_gf2(order_complex(models.chain(3)), max_faces=5)


def test_complex_validation():
    with pytest.raises(ValueError):
        SimplicialComplex(2, ((0,), (0, 1)))
    with pytest.raises(ValueError):
        SimplicialComplex(3, ((0,), (1,)))


def test_gf2_rank_small():
    assert gf2_rank([0b11, 0b11]) == 1
    assert gf2_rank([0b110, 0b011, 0b101]) == 2
    assert gf2_rank([]) == 0


@settings(max_examples=100, deadline=None)
@given(posets(max_n=6))
def test_betti_matches_sympy_and_euler(p):
    if p.n == 0:
        return
    k = order_complex(p)
    b = betti_gf2(k, max_dim=p.n)
    assert b == sympy_betti(k)
    chi = euler_characteristic(k)
    assert chi == sum((-1) ** i * x for i, x in enumerate(b))
    # chain counts by length
    assert chi == sum((-1) ** (len(c) - 1) for c in chains(p))
    assert k.dim == height(p).max_height


@settings(max_examples=100, deadline=None)
@given(posets(max_n=5))
def test_automorphisms_act_simplicially(p):
    faces = set(order_complex(p).faces)
    for f in automorphisms(p):
        for face in faces:
            assert tuple(sorted(f[x] for x in face)) in faces


@settings(max_examples=40, deadline=None)
@given(posets(max_n=5))
def test_subdivision_preserves_betti(p):
    if p.n == 0:
        return
    k = order_complex(p)
    sd = order_complex(face_poset(k))
    assert betti_gf2(sd, max_dim=p.n) == betti_gf2(k, max_dim=p.n)
