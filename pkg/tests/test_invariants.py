from hypothesis import given, settings

from finmod import models
from finmod.automorphisms import automorphisms
from finmod.invariants import chains, down_equivalence, height, strict_down
from finmod.space import bits, order_topology

from oracles import brute_chains, brute_heights, posets


def test_height_examples():
    assert height(models.chain(3)) == height(models.chain(3)).__class__((0, 1, 2), 2)
    assert height(models.star(4)).height == (0, 1, 1, 1, 1)
    c = models.circle4()
    assert height(c).height == brute_heights(c) == (0, 0, 1, 1)


def test_chain_examples():
    assert chains(models.antichain(2)) == [(0,), (1,)]
    assert chains(models.chain(2)) == [(0,), (0, 1), (1,)]
    c = chains(models.circle4())
    assert len(c) == 8
    assert c == brute_chains(models.circle4())


def test_empty_poset():
    p = models.antichain(0)
    assert chains(p) == []
    assert height(p).max_height == 0


def test_down_equivalence_examples():
    assert down_equivalence(models.antichain(3)).classes == ((0, 1, 2),)
    assert down_equivalence(models.circle4()).classes == ((0, 1), (2, 3))
    assert down_equivalence(models.chain(3)).classes == ((0,), (1,), (2,))


@settings(max_examples=150, deadline=None)
@given(posets(max_n=6))
def test_height_matches_chain_enumeration(p):
    assert height(p).height == brute_heights(p)
    assert chains(p) == brute_chains(p)


@settings(max_examples=150, deadline=None)
@given(posets(max_n=6))
def test_height_strictly_monotone(p):
    h = height(p).height
    for a, b in p.relations():
        assert h[a] < h[b]
    for a in range(p.n):
        assert (h[a] == 0) == (strict_down(p, a) == 0)


@settings(max_examples=150, deadline=None)
@given(posets(max_n=6))
def test_automorphisms_preserve_height_and_down_equivalence(p):
    h = height(p).height
    deq = down_equivalence(p)
    for f in automorphisms(p):
        assert all(h[f[a]] == h[a] for a in range(p.n))
        for a in range(p.n):
            for b in range(p.n):
                same = deq.class_of[a] == deq.class_of[b]
                assert same == (deq.class_of[f[a]] == deq.class_of[f[b]])


@settings(max_examples=100, deadline=None)
@given(posets(max_n=6))
def test_height_zero_subspace_is_discrete(p):
    h = height(p).height
    minimal = [a for a in range(p.n) if h[a] == 0]
    sub = p.restrict(minimal)
    opens = order_topology(sub).opens
    assert len(opens) == 2 ** len(minimal)
    # subspace opens = traces of opens of P on the minimal elements
    sp = order_topology(p)
    traces = {sum(1 << i for i, a in enumerate(minimal) if o >> a & 1) for o in sp.opens}
    assert traces == set(range(2 ** len(minimal)))


def test_down_equivalence_classes_match_strict_downsets():
    p = models.sphere(2)
    deq = down_equivalence(p)
    for a in range(p.n):
        for b in range(p.n):
            assert (deq.class_of[a] == deq.class_of[b]) == (strict_down(p, a) == strict_down(p, b))
    assert [bits(strict_down(p, c[0])) for c in deq.classes] == [[], [0, 1], [0, 1, 2, 3]]
