"""JSON file formats for spaces, posets and groups.

Space:  {"points": ["a", ...], "opens": [["a"], ...]}
Poset:  {"elements": ["a", ...], "relations": [["a", "b"], ...]}   (a <= b; any
        generating set, closed transitively on load)
Group:  {"order": k, "table": [[...], ...]}  or  {"degree": d, "generators": [[...], ...]}

Labels may be any JSON scalars; internally points are ``0..n-1`` in file order.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .errors import FormatError, NotAPoset, NotAPreorder
from .invariants import covers
from .realize import GroupSpec
from .space import FiniteSpace, Poset, bits, order_topology, validate_topology


def _index(labels: Sequence) -> dict:
    if len(set(map(_hashable, labels))) != len(labels):
        raise FormatError("duplicate labels")
    return {_hashable(l): i for i, l in enumerate(labels)}


def _hashable(x):
    if isinstance(x, (list, dict)):
        raise FormatError(f"label {x!r} must be a scalar")
    return x


def _lookup(index: dict, label) -> int:
    try:
        return index[_hashable(label)]
    except KeyError:
        raise FormatError(f"unknown label {label!r}") from None


def space_to_json(space: FiniteSpace, labels: Sequence | None = None) -> dict:
    labels = list(labels) if labels is not None else list(range(space.n))
    return {"points": labels, "opens": [[labels[x] for x in bits(o)] for o in space.open_sets()]}


def space_from_json(obj: dict) -> tuple[FiniteSpace, list]:
    try:
        labels = list(obj["points"])
        opens = obj["opens"]
    except (KeyError, TypeError):
        raise FormatError('space must have "points" and "opens"') from None
    index = _index(labels)
    return validate_topology(len(labels), [[_lookup(index, l) for l in o] for o in opens]), labels


def poset_to_json(poset: Poset, labels: Sequence | None = None) -> dict:
    labels = list(labels) if labels is not None else list(range(poset.n))
    cov = covers(poset)
    rel = [[labels[x], labels[y]] for y in range(poset.n) for x in cov[y]]
    return {"elements": labels, "relations": sorted(rel, key=lambda r: (labels.index(r[1]), labels.index(r[0])))}


def poset_from_json(obj: dict) -> tuple[Poset, list]:
    try:
        labels = list(obj["elements"])
        rels = obj.get("relations", [])
    except (KeyError, TypeError, AttributeError):
        raise FormatError('poset must have "elements" and "relations"') from None
    index = _index(labels)
    pairs = []
    for r in rels:
        if len(r) != 2:
            raise FormatError(f"relation {r!r} must be a pair")
        pairs.append((_lookup(index, r[0]), _lookup(index, r[1])))
    try:
        return Poset.from_relations(len(labels), pairs), labels
    except (NotAPoset, NotAPreorder) as exc:
        raise NotAPoset(f"relations do not define a partial order: {exc}") from None


def group_to_json(g: GroupSpec) -> dict:
    return {"order": g.order, "table": [list(r) for r in g.table]}


def group_from_json(obj: dict) -> GroupSpec:
    if "table" in obj:
        table = tuple(tuple(r) for r in obj["table"])
        if obj.get("order", len(table)) != len(table):
            raise FormatError('"order" does not match the table size')
        gens = obj.get("generators")
        return GroupSpec(len(table), table, tuple(gens) if gens is not None else None)
    if "degree" in obj and "generators" in obj:
        d = obj["degree"]
        gens = [tuple(p) for p in obj["generators"]]
        for p in gens:
            if sorted(p) != list(range(d)):
                raise FormatError(f"generator {list(p)} is not a permutation of 0..{d - 1}")
        return GroupSpec.from_perms(d, gens or [tuple(range(d))])
    raise FormatError('group must have "table" or "degree" + "generators"')


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def load_space(path: str | Path) -> tuple[FiniteSpace, list, Poset | None]:
    """Read a space or poset file; the poset (if the file held one) is returned too."""
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a JSON object")
    if "points" in obj:
        space, labels = space_from_json(obj)
        return space, labels, None
    if "elements" in obj:
        poset, labels = poset_from_json(obj)
        return order_topology(poset), labels, poset
    raise FormatError(f'{path}: expected "points"/"opens" or "elements"/"relations"')
