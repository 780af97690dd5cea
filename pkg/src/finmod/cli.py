"""Command-line interface: ``finmod <command> ... [--format json|text]``.

Exit status: 0 success, 1 invalid input, 2 size bound exceeded (argparse
usage errors also exit 2).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complexes, mcg, realize, verify
from .errors import BoundError, ValidationError
from .io import group_from_json, load_json, load_space, poset_to_json, space_to_json
from .perms import PermGroup, cycles
from .space import is_t0, specialization_preorder, t0_quotient, Poset


def _perm_text(p, labels) -> str:
    cyc = cycles(p)
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(labels[x]) for x in c) + ")" for c in cyc)


def _group(g: PermGroup, labels) -> dict:
    return {
        "order": g.order,
        "degree": g.degree,
        "points": list(labels),
        "generators": [list(p) for p in g.generators],
    }


def _group_text(title: str, d: dict) -> list[str]:
    lines = [f"{title}: order {d['order']} on {d['degree']} points"]
    for p in d["generators"]:
        lines.append("  generator " + _perm_text(p, d["points"]))
    return lines


def _class_labels(q, labels) -> list[str]:
    return ["{" + ",".join(str(labels[x]) for x in c) + "}" for c in q.classes]


def cmd_t0(args):
    space, labels, _ = load_space(args.file)
    quotient, q = t0_quotient(space)
    names = _class_labels(q, labels)
    out = {"classes": [[labels[x] for x in c] for c in q.classes], "weights": list(q.weights),
           "quotient": poset_to_json(quotient, names), "t0": q.is_trivial}
    text = [f"classes: {' '.join(names)}", f"weights: {list(q.weights)}",
            "quotient relations: " + (", ".join(f"{a}<{b}" for a, b in out["quotient"]["relations"]) or "(none)")]
    return out, text


def cmd_homeo(args):
    space, labels, _ = load_space(args.file)
    d = _group(mcg.homeo_group(space, args.max_points), labels)
    return d, _group_text("Homeo", d)


def cmd_kernel(args):
    space, labels, _ = load_space(args.file)
    d = _group(mcg.kernel_subgroup(space, args.max_points), labels)
    return d, _group_text("K", d)


def cmd_mod(args):
    space, labels, _ = load_space(args.file)
    _, q = t0_quotient(space)
    d = _group(mcg.mod_group(space, args.max_points), _class_labels(q, labels))
    return d, _group_text("Mod", d)


def cmd_check_thm1(args):
    space, labels, _ = load_space(args.file)
    rep = mcg.theorem1_check(space, args.max_points)
    _, q = t0_quotient(space)
    names = _class_labels(q, labels)
    out = {
        "mod_X": _group(rep.mod_X, names),
        "aut_T0": _group(rep.aut_T0, names),
        "weights": list(rep.weights),
        "is_subgroup": rep.is_subgroup,
        "isomorphic": rep.isomorphic,
        "witness": list(rep.witness) if rep.witness is not None else None,
    }
    text = [f"Mod(X) order {rep.mod_X.order}", f"Aut(T0(X)) order {rep.aut_T0.order}",
            f"weights: {list(rep.weights)}", f"isomorphic={str(rep.isomorphic).lower()}"]
    if rep.witness is not None:
        text.append("witness: " + _perm_text(rep.witness, names))
    return out, text


def cmd_sweep(args):
    rep = verify.sweep_theorem1(args.n, workers=args.workers, witness_cap=args.cap)
    out = {
        "n": rep.n, "total_spaces": rep.total_spaces, "t0_count": rep.t0_count,
        "iso_holds": rep.iso_holds, "iso_fails": rep.iso_fails,
        "invariant_violations": rep.invariant_violations,
        "fail_witnesses": [
            {"space": space_to_json(sp), "mod_order": r.mod_X.order, "aut_T0_order": r.aut_T0.order,
             "weights": list(r.weights), "witness": list(r.witness)}
            for sp, r in rep.fail_witnesses
        ],
    }
    text = [f"n={rep.n} total={rep.total_spaces} t0={rep.t0_count} holds={rep.iso_holds} "
            f"fails={rep.iso_fails} violations={rep.invariant_violations}"]
    for w in out["fail_witnesses"]:
        opens = " ".join("{" + ",".join(map(str, o)) + "}" for o in w["space"]["opens"])
        text.append(f"  fail: opens {opens}  |Mod|={w['mod_order']} |Aut T0|={w['aut_T0_order']}")
    return out, text


def _load_group(spec: str):
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        return group_from_json(load_json(path))
    try:
        return realize.builtin_group(spec)
    except KeyError:
        raise ValidationError(f"--group: unknown group {spec!r} (builtin name or JSON file)") from None


def cmd_realize(args):
    g = _load_group(args.group)
    poset = realize.realize_group(g, max_order=args.max_order)
    out = {"group_order": g.order, "poset": poset_to_json(poset), "size": poset.n}
    return out, [f"realized group of order {g.order} as a poset on {poset.n} elements (verified)"]


def _require_poset(args):
    space, labels, poset = load_space(args.file)
    if poset is None:
        if not is_t0(space):
            raise ValidationError("space is not T0; pass a poset or a T0 space")
        poset = Poset(space.n, specialization_preorder(space).down)
    return poset, labels


def cmd_core(args):
    poset, labels = _require_poset(args)
    pts = realize.core_points(poset)
    sub = poset.restrict(pts)
    kept = [labels[p] for p in pts]
    out = {"core": poset_to_json(sub, kept), "size": sub.n, "contractible": sub.n == 1}
    return out, [f"core has {sub.n} elements: {' '.join(map(str, kept))}"]


def cmd_complex(args):
    poset, labels = _require_poset(args)
    k = complexes.order_complex(poset)
    chi = complexes.euler_characteristic(k)
    betti = complexes.betti_gf2(k)
    out = {"faces": [[labels[x] for x in f] for f in k.faces], "dim": k.dim,
           "f_vector": k.f_vector(), "euler": chi, "betti_gf2": list(betti)}
    return out, [f"dim {k.dim}  f-vector {k.f_vector()}  euler {chi}  betti(GF2) {list(betti)}"]


def cmd_enumerate(args):
    n = args.n
    total = sum(1 for _ in verify.enumerate_topologies(n, args.t0, method=args.method))
    out = {"n": n, "t0_only": args.t0, "labeled": total}
    text = [f"n={n} {'T0 ' if args.t0 else ''}labeled topologies: {total}"]
    if args.unlabeled:
        u = verify.count_unlabeled(n, args.t0)
        out["unlabeled"] = u
        text.append(f"up to homeomorphism: {u}")
    return out, text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    parser = argparse.ArgumentParser(prog="finmod", description="Mapping class groups of finite spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file", help="space or poset JSON file")
        p.add_argument("--max-points", type=int, default=mcg.DEFAULT_MAX_POINTS)
        p.set_defaults(fn=fn)
        return p

    with_file("t0", cmd_t0, "T0 quotient and class weights")
    with_file("homeo", cmd_homeo, "homeomorphism group")
    with_file("mod", cmd_mod, "mapping class group")
    with_file("kernel", cmd_kernel, "indistinguishability kernel")
    with_file("check-thm1", cmd_check_thm1, "compare Mod(X) with Mod(T0(X))")
    with_file("core", cmd_core, "beat-point core of a poset")
    with_file("complex", cmd_complex, "order complex, Euler characteristic, GF(2) Betti numbers")

    p = sub.add_parser("sweep", parents=[common], help="Mod(X) vs Mod(T0(X)) over all labeled topologies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=10, help="max failure witnesses reported")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("realize", parents=[common], help="finite poset with prescribed mapping class group")
    p.add_argument("--group", required=True, help="builtin name (C3, klein4, S3, ...) or group JSON file")
    p.add_argument("--max-order", type=int, default=24)
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("enumerate", parents=[common], help="count labeled topologies")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t0", action="store_true")
    p.add_argument("--unlabeled", action="store_true", help="also count up to homeomorphism")
    p.add_argument("--method", choices=["preorder", "family"], default="preorder")
    p.set_defaults(fn=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, text = args.fn(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BoundError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print("\n".join(text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
