"""Brute-force reference computations, deliberately independent of the library paths they check."""

from itertools import combinations, permutations

import hypothesis.strategies as st

from finmod.space import Poset, Preorder


def brute_leq(n, opens):
    """x <= y iff every open containing y contains x, straight from the open sets."""
    return [[all(o >> x & 1 for o in opens if o >> y & 1) for y in range(n)] for x in range(n)]


def brute_lower_sets(pre):
    out = []
    for m in range(1 << pre.n):
        if all(not (m >> y & 1) or all(m >> x & 1 for x in range(pre.n) if pre.leq(x, y)) for y in range(pre.n)):
            out.append(m)
    return out


def brute_homeos(n, opens):
    """Bijections mapping the family of opens onto itself."""
    family = set(opens)
    out = []
    for p in permutations(range(n)):
        img = {sum(1 << p[x] for x in range(n) if o >> x & 1) for o in family}
        if img == family:
            out.append(p)
    return sorted(out)


def brute_poset_auts(pre):
    n = pre.n
    return sorted(
        p for p in permutations(range(n))
        if all(pre.leq(x, y) == pre.leq(p[x], p[y]) for x in range(n) for y in range(n))
    )


def brute_chains(pre):
    out = []
    for k in range(1, pre.n + 1):
        for sub in combinations(range(pre.n), k):
            if all(pre.leq(a, b) or pre.leq(b, a) for a, b in combinations(sub, 2)):
                out.append(tuple(sorted(sub, key=lambda x: sum(pre.leq(y, x) for y in sub))))
    return sorted(out)


def brute_heights(pre):
    return tuple(max(len(c) - 1 for c in brute_chains(pre) if c[-1] == a) for a in range(pre.n))


def brute_graph_auts(vertex_count, edges):
    es = {frozenset(e) for e in edges}
    return sum(
        1 for p in permutations(range(vertex_count))
        if {frozenset((p[u], p[v])) for u, v in es} == es
    )


def table_isomorphic_brute(t1, t2):
    """Search every bijection fixing the identity (index 0)."""
    k = len(t1)
    if k != len(t2):
        return False
    for rest in permutations(range(1, k)):
        phi = (0,) + rest
        if all(phi[t1[a][b]] == t2[phi[a]][phi[b]] for a in range(k) for b in range(k)):
            return True
    return False


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if draw(st.booleans())]
    labels = draw(st.permutations(range(n)))
    return Poset.from_relations(n, [(labels[a], labels[b]) for a, b in pairs])


@st.composite
def preorders(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b and draw(st.integers(0, 3)) == 0]
    return Preorder.from_relations(n, pairs)
