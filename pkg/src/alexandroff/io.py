"""JSON space files, flow files and verdicts.

Rationals travel as strings ("3", "-1/2") so nothing passes through floats.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import MalformedInput, NotAPreorder
from .flows import Axiom, FlowCandidate, FlowVerdict
from .space import FiniteSpace, Preorder, topology_from_preorder, validate_space


def read_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc


def space_from_json(obj: Any) -> FiniteSpace:
    if not isinstance(obj, dict) or "elements" not in obj:
        raise MalformedInput("space object needs an 'elements' list")
    if ("opens" in obj) == ("order" in obj):
        raise MalformedInput("space object needs exactly one of 'opens' or 'order'")
    elements = obj["elements"]
    if not isinstance(elements, list):
        raise MalformedInput("'elements' must be a list")
    if "opens" in obj:
        opens = obj["opens"]
        if not isinstance(opens, list) or not all(isinstance(o, list) for o in opens):
            raise MalformedInput("'opens' must be a list of lists")
        return validate_space(elements, opens)
    # the indiscrete topology is always valid, so this only checks the labels
    base = validate_space(elements, [[], elements])
    pairs = []
    for pair in obj["order"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedInput("each order entry must be a pair [u, v]")
        pairs.append((base.index(pair[0]), base.index(pair[1])))
    try:
        p = Preorder.from_pairs(base.n, pairs)
    except NotAPreorder as exc:  # pragma: no cover - closure always yields a preorder
        raise MalformedInput(str(exc)) from exc
    return topology_from_preorder(p, base.elements)


def space_to_json(space: FiniteSpace) -> dict:
    return {
        "elements": list(space.elements),
        "opens": [space.labels_of(o) for o in sorted(space.opens, key=lambda m: (m.bit_count(), m))],
    }


def load_space(path) -> FiniteSpace:
    return space_from_json(read_json(path))


def rational_to_json(v) -> Any:
    if isinstance(v, float) and math.isinf(v):
        return "unbounded"
    if isinstance(v, Fraction):
        return str(v)
    return v


def jsonable(obj: Any) -> Any:
    """Recursively turn Fractions, enums and tuples into JSON-ready values."""
    if isinstance(obj, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, Axiom):
        return obj.value
    if isinstance(obj, (Fraction, float)):
        return rational_to_json(obj)
    return obj


def flow_from_json(obj: Any, base_dir: Path | None = None) -> FlowCandidate:
    if not isinstance(obj, dict):
        raise MalformedInput("flow file must hold a JSON object")
    for key in ("space", "maps", "breakpoints", "pieces"):
        if key not in obj:
            raise MalformedInput(f"flow file is missing {key!r}")
    space_obj = obj["space"]
    if isinstance(space_obj, str):
        path = Path(space_obj)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        space = load_space(path)
    else:
        space = space_from_json(space_obj)
    maps = obj["maps"]
    if not isinstance(maps, dict) or not all(isinstance(m, dict) for m in maps.values()):
        raise MalformedInput("'maps' must map names to {element: element} objects")
    try:
        breakpoints = [Fraction(str(b)) for b in obj["breakpoints"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad rational in breakpoints: {exc}") from exc
    return FlowCandidate.build(space, maps, breakpoints, obj["pieces"])


def load_flow(path) -> FlowCandidate:
    path = Path(path)
    return flow_from_json(read_json(path), path.parent)


def flow_to_json(c: FlowCandidate) -> dict:
    el = c.space.elements
    return {
        "space": space_to_json(c.space),
        "maps": {name: {el[i]: el[j] for i, j in enumerate(f.image)} for name, f in c.maps.items()},
        "breakpoints": [str(b) for b in c.schedule.breakpoints],
        "pieces": list(c.schedule.assignment),
    }


def verdict_to_json(v: FlowVerdict) -> dict:
    return {
        "pass": v.passed,
        "failed_axiom": v.failed_axiom.value if v.failed_axiom else None,
        "witness": jsonable(v.witness),
        "axioms": {
            a.value: {"pass": r.passed, "witness": jsonable(r.witness)} for a, r in v.results.items()
        },
    }
