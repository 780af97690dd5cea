"""Exit criteria. Each test prints one PASS/FAIL line, visible even without ``-s``."""

import json
import time
from math import factorial
from pathlib import Path

import pytest

from finmod import models
from finmod.automorphisms import automorphisms
from finmod.complexes import betti_gf2, euler_characteristic, face_poset, order_complex
from finmod.invariants import down_equivalence, height
from finmod.io import load_space, poset_from_json, poset_to_json, space_from_json, space_to_json
from finmod.mcg import mod_group, theorem1_check
from finmod.perms import group_iso
from finmod.realize import (
    GroupSpec,
    all_cores,
    core,
    cyclic,
    klein4,
    realize_group,
    regular_representation,
    symmetric,
)
from finmod.mcg import homeo_group
from finmod.space import order_topology, specialization_preorder
from finmod.verify import (
    check_space,
    enumerate_preorders,
    enumerate_topologies,
    unlabeled_posets,
)

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, detail

    return emit


def test_ac1_star_posets(report):
    t = time.perf_counter()
    orders = [mod_group(order_topology(models.star(n))).order for n in range(1, 7)]
    elapsed = time.perf_counter() - t
    expected = [factorial(n) for n in range(1, 7)]
    ok = orders == expected and elapsed < 1.0
    report("AC1 star |Mod| = n!", ok, f"orders {orders}, {elapsed:.3f}s (< 1s)")


def test_ac2_sweep_invariants(report):
    t = time.perf_counter()
    spaces = list(enumerate_topologies(4))
    checks = [check_space(sp) for sp in spaces]
    c3_checks = [theorem1_check(models.c3()), theorem1_check(models.c3_padded())]
    elapsed = time.perf_counter() - t
    a = all(c.order_identity for c in checks)
    b = all(c.kernel_normal and c.certificates_ok for c in checks)
    c = all(c.report.isomorphic for c in checks if c.t0)
    d = all(not r.isomorphic and r.witness is not None for r in c3_checks)
    padded_in_sweep = models.c3_padded() in spaces
    ok = len(spaces) == 355 and a and b and c and d and padded_in_sweep and elapsed < 30
    fails = sum(not c.report.isomorphic for c in checks)
    report(
        "AC2 sweep n=4",
        ok,
        f"{len(spaces)} spaces, (a)={a} (b)={b} (c)={c} (d)={d}, iso fails {fails}, {elapsed:.2f}s (< 30s)",
    )


def test_ac3_enumeration_oracles(report):
    labeled, t0 = [], []
    agree = True
    for n in range(5):
        fam = list(enumerate_topologies(n, method="family"))
        pre = list(enumerate_topologies(n, method="preorder"))
        fam_t0 = list(enumerate_topologies(n, True, method="family"))
        pre_t0 = list(enumerate_topologies(n, True, method="preorder"))
        agree &= set(fam) == set(pre) and set(fam_t0) == set(pre_t0)
        agree &= len(fam) == len(pre) and len(fam_t0) == len(pre_t0)
        labeled.append(len(pre))
        t0.append(len(pre_t0))
    ok = agree and labeled == [1, 1, 4, 29, 355] and t0 == [1, 1, 3, 19, 219]
    report("AC3 enumeration counts", ok, f"labeled {labeled}, T0 {t0}, oracles agree={agree}")


def test_ac4_automorphism_invariants(report):
    violations = 0
    checked = 0
    for n in range(6):
        for p in enumerate_preorders(n, t0_only=True):
            h = height(p).height
            deq = down_equivalence(p).class_of
            for f in automorphisms(p):
                checked += 1
                if any(h[f[a]] != h[a] for a in range(n)):
                    violations += 1
                elif any(
                    (deq[a] == deq[b]) != (deq[f[a]] == deq[f[b]]) for a in range(n) for b in range(n)
                ):
                    violations += 1
    report("AC4 automorphisms preserve height/down-eq", violations == 0,
           f"{checked} automorphisms over all labeled posets on <= 5 points, {violations} violations")


GROUPS = {
    "trivial": cyclic(1),
    "C2": cyclic(2),
    "C3": cyclic(3),
    "C4": cyclic(4),
    "Klein-4": klein4(),
    "C5": cyclic(5),
    "C6": cyclic(6),
    "S3": GroupSpec(6, symmetric(3).table),
}


@pytest.mark.parametrize("name", list(GROUPS))
def test_ac5_realization(report, name):
    g = GROUPS[name]
    t = time.perf_counter()
    p = realize_group(g, verify=False)
    homeo = homeo_group(order_topology(p), max_points=None)
    iso = group_iso(homeo, regular_representation(g))
    elapsed = time.perf_counter() - t
    report(f"AC5 realize {name}", iso and elapsed < 10,
           f"poset on {p.n} points, |Homeo| = {homeo.order}, iso={iso}, {elapsed:.2f}s (< 10s)")


def test_ac6_cores(report):
    chains_ok = all(core(models.chain(n)).n == 1 for n in range(1, 9))
    stars_ok = all(core(models.star(n)).n == 1 for n in range(0, 8))
    circle_ok = core(models.circle4()) == models.circle4()
    posets = [p for n in range(7) for p in unlabeled_posets(n)]
    independent = all(len(all_cores(p)) == 1 for p in posets if p.n)
    ok = chains_ok and stars_ok and circle_ok and independent and len(posets) == 406
    report("AC6 cores", ok,
           f"chains={chains_ok} stars={stars_ok} circle={circle_ok}, "
           f"order-independent on {len(posets)} posets (<= 6, up to iso)={independent}")


def test_ac7_mccord_invariants(report):
    t = time.perf_counter()
    circle = betti_gf2(order_complex(models.circle4()))
    sphere = betti_gf2(order_complex(models.sphere(2)))
    battery = [order_complex(p) for n in range(1, 6) for p in unlabeled_posets(n)]
    battery += [order_complex(models.sphere(d)) for d in range(3)]
    battery += [order_complex(face_poset(order_complex(models.circle4())))]
    euler_ok = all(
        euler_characteristic(k) == sum((-1) ** i * b for i, b in enumerate(betti_gf2(k))) for k in battery
    )
    elapsed = time.perf_counter() - t
    ok = circle == (1, 1) and sphere == (1, 0, 1) and euler_ok and elapsed < 1.0
    report("AC7 McCord invariants", ok,
           f"circle {circle}, sphere {sphere}, euler identity on {len(battery)} complexes={euler_ok}, "
           f"{elapsed:.3f}s (< 1s)")


def test_ac8_round_trips(report):
    posets = [p for n in range(6) for p in enumerate_preorders(n, t0_only=True)]
    posets += [models.star(6), models.sphere(3), models.chain(7)]
    topo_ok = all(specialization_preorder(order_topology(p)) == p for p in posets)
    poset_io = all(poset_from_json(json.loads(json.dumps(poset_to_json(p))))[0] == p for p in posets)
    spaces = [sp for n in range(5) for sp in enumerate_topologies(n)]
    space_io = all(space_from_json(json.loads(json.dumps(space_to_json(sp))))[0] == sp for sp in spaces)
    fixtures = 0
    fixture_ok = True
    for path in sorted(DATA.glob("*.json")):
        obj = json.loads(path.read_text())
        if "points" in obj:
            sp, labels, _ = load_space(path)
            fixture_ok &= space_from_json(space_to_json(sp, labels)) == (sp, labels)
            fixtures += 1
        elif "elements" in obj:
            _, labels, p = load_space(path)
            fixture_ok &= poset_from_json(poset_to_json(p, labels)) == (p, labels)
            fixture_ok &= specialization_preorder(order_topology(p)) == p
            fixtures += 1
    ok = topo_ok and poset_io and space_io and fixture_ok
    report("AC8 round trips", ok,
           f"{len(posets)} posets (topology={topo_ok}, json={poset_io}), {len(spaces)} spaces json={space_io}, "
           f"{fixtures} fixture files={fixture_ok}")
