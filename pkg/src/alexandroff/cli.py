"""Command-line entry point.

Every command prints one JSON report on stdout (or a plain summary with
``--text``) and exits 0 when all checks pass, 1 when a check fails or the input
violates a modeled property, and 2 when the input cannot be read.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import io
from .dot import equivalent_pairs, hasse_edges, to_dot
from .errors import AxiomViolation, MalformedInput, TopologyError
from .flows import Axiom, is_flow, is_trivial, local_stability_radius, search_flows
from .hyperspace import (
    Variant,
    build_hyperspace,
    embed_into_upper,
    hyper_order,
)
from .props import DIVISIBILITY_NOTE, SWAP_NOTE, hyperspace_checks, suite
from .space import (
    _t0_by_definition,
    _t1_by_definition,
    is_discrete,
    is_embedding,
    is_T0,
    is_T1,
    specialization_preorder,
)

SCHEMA_VERSION = 1

VARIANT_FLAGS = {
    "lower": Variant.LOWER,
    "sl": Variant.STRONG_LOWER,
    "upper": Variant.UPPER,
    "fl": Variant.FINITE_LOWER,
    "fu": Variant.FINITE_UPPER,
}


class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.inputs = {}
        self.checks = {}
        self.result = {}
        self.notes = []
        self.error = None

    def digest(self, path):
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise MalformedInput(f"cannot read {path}: {exc}") from exc
        self.inputs[str(path)] = hashlib.sha256(data).hexdigest()

    def check(self, name, passed, witness=None):
        entry = {"pass": bool(passed)}
        if witness is not None:
            entry["witness"] = io.jsonable(witness)
        self.checks[name] = entry

    @property
    def exit_code(self):
        if self.error is not None:
            return self.error["exit_code"]
        return 0 if all(c["pass"] for c in self.checks.values()) else 1

    def to_json(self):
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "checks": self.checks,
            "result": io.jsonable(self.result),
        }
        if self.notes:
            out["notes"] = self.notes
        if self.error is not None:
            out["error"] = self.error
        out["exit_code"] = self.exit_code
        return out


def _labels(space, mask):
    return space.labels_of(mask)


# -- commands -------------------------------------------------------------------


def cmd_validate(args, report):
    report.digest(args.space)
    space = io.load_space(args.space)
    report.check("valid", True)
    report.check("t0_definition_matches_antisymmetry", _t0_by_definition(space) == specialization_preorder(space).is_antisymmetric())
    report.check("t1_definition_matches_discreteness", _t1_by_definition(space) == is_discrete(space))
    report.result = {
        "space": io.space_to_json(space),
        "t0": is_T0(space),
        "t1": is_T1(space),
        "discrete": is_discrete(space),
        "minimal_neighborhoods": {
            str(x): _labels(space, u) for x, u in zip(space.elements, space.minimal_opens)
        },
    }


def cmd_order(args, report):
    report.digest(args.space)
    space = io.load_space(args.space)
    p = specialization_preorder(space)
    el = space.elements
    dot = to_dot(space)
    poset = p.is_antisymmetric()
    report.result = {
        "is_poset": poset,
        "hasse_edges": [[el[u], el[v]] for u, v in hasse_edges(p)],
        "equivalent_pairs": [[el[u], el[v]] for u, v in equivalent_pairs(p)],
    }
    if args.dot:
        Path(args.dot).write_text(dot, encoding="utf-8")
        report.result["dot_path"] = args.dot
    else:
        report.result["dot"] = dot
    if args.require_poset:
        report.check("antisymmetric", poset)


def cmd_hyper(args, report):
    report.digest(args.space)
    base = io.load_space(args.space)
    variant = VARIANT_FLAGS[args.variant]
    h = build_hyperspace(base, variant)
    hyper_order(h)
    for c in hyperspace_checks(base):
        report.check(c.name, c.passed, c.detail or None)
    provenance = {"variant": variant.value, "base": list(base.elements)}
    space_json = io.space_to_json(h.space)
    if args.out:
        out = Path(args.out)
        out.write_text(json.dumps(space_json, indent=2) + "\n", encoding="utf-8")
        sidecar = out.with_name(out.stem + ".provenance.json")
        sidecar.write_text(json.dumps(provenance, indent=2) + "\n", encoding="utf-8")
        report.result = {"hyperspace_path": str(out), "provenance_path": str(sidecar)}
    else:
        report.result = {"hyperspace": space_json}
    order = "reverse_inclusion" if variant.lower_like else "inclusion"
    report.result.update(
        {"provenance": provenance, "points": h.space.n, "opens": len(h.space.opens), "order": order}
    )


def cmd_embed(args, report):
    report.digest(args.space)
    space = io.load_space(args.space)
    f, h = embed_into_upper(space)
    report.check("injective", len(set(f.image)) == len(f.image))
    p = specialization_preorder(space)
    report.check(
        "order_embedding",
        all(
            p.le(x, y) == (space.minimal_opens[x] & ~space.minimal_opens[y] == 0)
            for x in range(space.n)
            for y in range(space.n)
        ),
    )
    report.check("subspace_homeomorphism", is_embedding(space, h.space, f))
    report.result = {
        "map": {str(x): h.space.elements[j] for x, j in zip(space.elements, f.image)},
        "target_variant": h.variant.value,
    }
    if args.out:
        Path(args.out).write_text(json.dumps(io.space_to_json(h.space), indent=2) + "\n", encoding="utf-8")
        report.result["hyperspace_path"] = args.out


def _looks_like_swap(c):
    # identity at 0 and one fixed involution at every other time
    ident = tuple(range(c.space.n))
    others = {img for k, img in enumerate(c.images) if k != c.schedule.piece_index(0)}
    if c.map_at(0) != ident or len(others) != 1:
        return False
    (img,) = others
    return img != ident and tuple(img[v] for v in img) == ident


def cmd_flow_verify(args, report):
    report.digest(args.flow)
    c = io.load_flow(args.flow)
    verdict = is_flow(c)
    for axiom, r in verdict.results.items():
        report.check(axiom.value, r.passed, r.witness)
    radii = {str(x): local_stability_radius(c, x) for x in c.space.elements}
    report.result = {
        "verdict": io.verdict_to_json(verdict),
        "trivial": is_trivial(c),
        "stability_radius": {k: ("none" if v is None else v) for k, v in radii.items()},
    }
    if verdict.failed_axiom is Axiom.GROUP_LAW and _looks_like_swap(c):
        report.notes.append(SWAP_NOTE)
        report.result["swap_construction_discrepancy"] = True


def _parse_pool(text):
    try:
        return [io.Fraction(p.strip()) for p in text.split(",") if p.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad rational in pool: {exc}") from exc


def cmd_flow_search(args, report):
    report.digest(args.space)
    space = io.load_space(args.space)
    pool = _parse_pool(args.pool)
    found = search_flows(space, pool, args.max_bp, homeo_only=args.homeo_only)
    t0 = is_T0(space)
    all_trivial = all(is_trivial(c) for c in found)
    report.result = {
        "t0": t0,
        "pool": [str(p) for p in sorted(set(pool))],
        "max_breakpoints": args.max_bp,
        "homeo_only": args.homeo_only,
        "count": len(found),
        "all_trivial": all_trivial,
        "candidates": [
            {k: v for k, v in io.flow_to_json(c).items() if k != "space"} for c in found
        ],
    }
    if t0:
        report.check("only_trivial_flows_on_t0_space", all_trivial)
        if all_trivial:
            report.result["statement"] = "Theorem witnessed: only trivial flows found"
    else:
        report.check("only_trivial_flows_on_finite_space", all_trivial)
        report.notes.append(DIVISIBILITY_NOTE)
        report.notes.append(SWAP_NOTE)


def cmd_props(args, report):
    for c in suite(max_n=args.max_n, flow_max_n=args.flow_max_n):
        report.check(c.name, c.passed, c.detail or None)


# -- plumbing -------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="plain-text summary instead of JSON")
    common.add_argument("--timing", action="store_true", help="add elapsed milliseconds to the report")

    parser = argparse.ArgumentParser(prog="alexandroff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a space file")
    p.add_argument("space")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("order", parents=[common], help="Hasse diagram of the specialization order")
    p.add_argument("space")
    p.add_argument("--dot", metavar="PATH", help="also write the diagram to PATH")
    p.add_argument("--require-poset", action="store_true", help="fail unless the space is T0")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("hyper", parents=[common], help="hyperspace of a discrete space")
    p.add_argument("space")
    p.add_argument("--variant", choices=sorted(VARIANT_FLAGS), default="sl")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_hyper)

    p = sub.add_parser("embed", parents=[common], help="embed a T0 space into its upper hyperspace")
    p.add_argument("space")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_embed)

    flow = sub.add_parser("flow", help="flow verification and search")
    flow_sub = flow.add_subparsers(dest="flow_command", required=True)
    p = flow_sub.add_parser("verify", parents=[common], help="decide the flow axioms for a flow file")
    p.add_argument("flow")
    p.set_defaults(func=cmd_flow_verify)
    p = flow_sub.add_parser("search", parents=[common], help="enumerate step-schedule flows")
    p.add_argument("space")
    p.add_argument("--pool", default="-1,0,1", help="comma-separated rational breakpoints")
    p.add_argument("--max-bp", type=int, default=2, help="most breakpoints per schedule")
    p.add_argument("--homeo-only", action="store_true", help="only try homeomorphisms as pieces")
    p.set_defaults(func=cmd_flow_search)

    p = sub.add_parser("props", parents=[common], help="run every structural check on small spaces")
    p.add_argument("--max-n", type=int, default=3, choices=[1, 2, 3, 4])
    p.add_argument("--flow-max-n", type=int, default=2, choices=[1, 2, 3])
    p.set_defaults(func=cmd_props)
    return parser


def render_text(out):
    lines = [f"command: {' '.join(out['command'])}"]
    if "error" in out:
        lines.append(f"error: {out['error']['type']}: {out['error']['message']}")
    for name, c in out["checks"].items():
        line = f"{'PASS' if c['pass'] else 'FAIL'}  {name}"
        if not c["pass"] and "witness" in c:
            line += f"  witness={json.dumps(c['witness'])}"
        lines.append(line)
    for key, value in out["result"].items():
        if key == "dot":
            lines.append(value.rstrip())
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    for note in out.get("notes", []):
        lines.append(f"note: {note}")
    if "timing_ms" in out:
        lines.append(f"timing_ms: {out['timing_ms']}")
    lines.append(f"exit: {out['exit_code']}")
    return "\n".join(lines)


def _glue_pool(argv):
    # "--pool -1,0,1" would otherwise be read as an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--pool":
            out.append("--pool=" + next(it, ""))
        else:
            out.append(a)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_glue_pool(argv))
    report = Report(argv)
    start = time.perf_counter()
    try:
        args.func(args, report)
    except MalformedInput as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc), "exit_code": 2}
    except TopologyError as exc:
        report.error = {"type": type(exc).__name__, "message": str(exc), "exit_code": 1}
        if isinstance(exc, AxiomViolation) and exc.witness is not None:
            report.error["witness"] = io.jsonable(exc.witness)
    out = report.to_json()
    if args.timing:
        out["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)
    if args.text:
        print(render_text(out))
    else:
        print(json.dumps(out, indent=2, sort_keys=False))
    return out["exit_code"]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
