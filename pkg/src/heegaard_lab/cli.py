"""Batch front door: parse input files, dispatch to the engines, and emit
deterministic reports.

Exit codes: 0 for certified results, 1 for input errors, 2 when a verdict is
scoped by an exhausted cap or budget.  JSON is the stable contract; text is
for humans; DOT is for graph rendering.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import proptools, serialize, sog
from .disk_complex import (
    build_gamma,
    build_lambda,
    classify,
    emit_graph,
    quotient_by_symmetry,
)
from .ghs import InvalidGHS, InvalidMove, apply_move, compare_ghs, ghs_key
from .handlebody import InvalidCutSystem
from .serialize import FormatError, dumps
from .sog import FlattenBudgetExhausted, flatten, max_key, verify_single_maximal
from .surface import (
    BudgetExhausted,
    InessentialCurve,
    InvalidCoordinates,
    SurfaceMismatch,
    enumerate_essential_curves,
    geometric_intersection,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SCOPED = 2


@dataclass(frozen=True)
class RunConfig:
    """One invocation: the command, its inputs, and its knobs.  Unknown
    flags are rejected by the parser; cap and budget must be positive."""

    command: str
    format: str
    cap: Optional[int] = None
    budget: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.cap is not None and self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")


def _config_of(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        format=args.format,
        cap=getattr(args, "cap", None),
        budget=getattr(args, "budget", None),
        seed=getattr(args, "seed", None),
    )

INPUT_ERRORS = (FormatError, InvalidCoordinates, InessentialCurve,
                SurfaceMismatch, InvalidCutSystem, InvalidGHS, InvalidMove,
                sog.InvalidSOG, json.JSONDecodeError, FileNotFoundError,
                KeyError, ValueError)


def _load_json(path: str):
    if path.strip().startswith(("{", "[")):
        return json.loads(path)
    return json.loads(Path(path).read_text())


def _emit(args, payload: dict) -> None:
    if args.format == "text":
        for key, value in sorted(payload.items()):
            print(f"{key}: {value}")
    else:
        sys.stdout.write(dumps(payload))


def cmd_surface_curves(args) -> int:
    try:
        curves = enumerate_essential_curves(args.genus, args.cap, args.budget)
        scoped = False
    except BudgetExhausted as exc:
        curves = exc.partial
        scoped = True
    payload = {
        "genus": args.genus, "cap": args.cap,
        "complete": not scoped,
        "curves": [serialize.curve_to_jsonable(c) for c in curves],
    }
    _emit(args, payload)
    return EXIT_SCOPED if scoped else EXIT_OK


def cmd_intersect(args) -> int:
    a = serialize.curve_from_jsonable(_load_json(args.a))
    b = serialize.curve_from_jsonable(_load_json(args.b))
    n = geometric_intersection(a, b)
    _emit(args, {"intersection": n})
    return EXIT_OK


def cmd_diagram(args) -> int:
    diagram = serialize.diagram_from_jsonable(_load_json(args.diagram))
    if args.action == "classify":
        verdict = classify(diagram, args.cap, args.budget)
        payload = {
            "summary": verdict.summary(),
            "has_red_disk": verdict.has_red_disk,
            "has_blue_disk": verdict.has_blue_disk,
            "red_witness": serialize.curve_to_jsonable(verdict.red_witness)
            if verdict.red_witness else None,
            "blue_witness": serialize.curve_to_jsonable(verdict.blue_witness)
            if verdict.blue_witness else None,
            "reducing_class":
                serialize.curve_to_jsonable(verdict.reducing_class)
                if verdict.reducing_class else None,
            "edge_witness": [list(v) for v in verdict.edge_witness]
            if verdict.edge_witness else None,
            "critical_witness":
                [[list(v) for v in verdict.critical_witness[0]],
                 [list(v) for v in verdict.critical_witness[1]],
                 verdict.critical_witness[2], verdict.critical_witness[3]]
                if verdict.critical_witness else None,
            "negative_claims_cap": verdict.negative_claims_cap,
            "certified": verdict.certified,
        }
        _emit(args, payload)
        return EXIT_OK if verdict.certified else EXIT_SCOPED
    if args.action in ("gamma", "lambda"):
        build = build_gamma if args.action == "gamma" else build_lambda
        graph = build(diagram, args.cap, args.budget)
        fmt = "dot" if args.format == "dot" else "json"
        sys.stdout.write(emit_graph(graph, fmt).decode())
        return EXIT_OK if graph.certified else EXIT_SCOPED
    if args.action == "quotient":
        graph = build_gamma(diagram, args.cap, args.budget)
        pairs = _load_json(args.bijection)
        sigma = {}
        for pair in pairs:
            u = serialize.curve_from_jsonable(pair[0])
            v = serialize.curve_from_jsonable(pair[1])
            sigma[u.coords] = v.coords
        quotient = quotient_by_symmetry(graph, [sigma])
        fmt = "dot" if args.format == "dot" else "json"
        sys.stdout.write(emit_graph(quotient, fmt).decode())
        return EXIT_OK if graph.certified else EXIT_SCOPED
    raise ValueError(f"unknown diagram action {args.action!r}")


def cmd_ghs(args) -> int:
    if args.action == "reduce":
        ghs = serialize.ghs_from_jsonable(_load_json(args.infile))
        move = serialize.move_from_jsonable(_load_json(args.move))
        result = apply_move(ghs, move)
        _emit(args, {"result": serialize.ghs_to_jsonable(result),
                     "key": ghs_key(result)})
        return EXIT_OK
    if args.action == "compare":
        a = serialize.ghs_from_jsonable(_load_json(args.a))
        b = serialize.ghs_from_jsonable(_load_json(args.b))
        _emit(args, {"order": compare_ghs(a, b),
                     "key_a": ghs_key(a), "key_b": ghs_key(b)})
        return EXIT_OK
    raise ValueError(f"unknown ghs action {args.action!r}")


def cmd_sog(args) -> int:
    if args.action == "flatten":
        oracle = serialize.oracle_from_jsonable(_load_json(args.oracle))

        def endpoint(text: str):
            try:
                return serialize.ghs_from_jsonable(_load_json(text))
            except INPUT_ERRORS:
                return text

        try:
            result = flatten(endpoint(args.start), endpoint(args.end),
                             oracle, args.budget)
        except FlattenBudgetExhausted as exc:
            _emit(args, {"error": str(exc)})
            return EXIT_SCOPED
        _emit(args, {
            "sog": serialize.sog_to_jsonable(result),
            "max_key": [list(k) for k in max_key(result)],
            "single_maximal": verify_single_maximal(result),
        })
        return EXIT_OK
    if args.action == "verify":
        s = serialize.sog_from_jsonable(_load_json(args.infile))
        _emit(args, {
            "valid": True,
            "maximal_positions": sog.maximal_positions(s),
            "minimal_positions": sog.minimal_positions(s),
            "max_key": [list(k) for k in max_key(s)],
            "single_maximal": verify_single_maximal(s),
        })
        return EXIT_OK
    raise ValueError(f"unknown sog action {args.action!r}")


def cmd_distance(args) -> int:
    diagram = serialize.diagram_from_jsonable(_load_json(args.diagram))

    def edge(text: str):
        pair = _load_json(text)
        return tuple(serialize.curve_from_jsonable(c).coords for c in pair)

    result = sog.splitting_distance(diagram, edge(args.edge1),
                                    edge(args.edge2), args.cap, args.budget)
    payload = {"connected_within_cap": result.connected,
               "distance": result.value, "cap": result.cap}
    _emit(args, payload)
    return EXIT_OK if result.connected else EXIT_SCOPED


def cmd_proptest(args) -> int:
    reports = proptools.property_suite(args.seed, args.iterations)
    payload = {"seed": args.seed, "iterations": args.iterations,
               "results": [
                   {"name": r.name, "iterations": r.iterations,
                    "passed": r.passed,
                    "failures": [repr(f) for f in r.failures[:5]]}
                   for r in reports]}
    _emit(args, payload)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heegaard-lab",
        description="Disk complexes, Heegaard diagrams, and GHS calculus.")
    parser.add_argument("--format", choices=("json", "text", "dot"),
                        default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("surface", help="model surface queries")
    ps = p.add_subparsers(dest="action", required=True)
    pc = ps.add_parser("curves", help="enumerate essential curves")
    pc.add_argument("--genus", type=int, required=True)
    pc.add_argument("--cap", type=int, required=True)
    pc.add_argument("--budget", type=int, default=None)
    pc.set_defaults(func=cmd_surface_curves)

    p = sub.add_parser("intersect", help="geometric intersection number")
    p.add_argument("--a", required=True, help="curve JSON (file or inline)")
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("diagram", help="disk-complex operations")
    p.add_argument("action",
                   choices=("classify", "gamma", "lambda", "quotient"))
    p.add_argument("--diagram", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--bijection", default=None,
                   help="JSON list of [curve, curve] pairs (quotient only)")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("ghs", help="generalized Heegaard splitting calculus")
    gs = p.add_subparsers(dest="action", required=True)
    gr = gs.add_parser("reduce", help="apply one move")
    gr.add_argument("--in", dest="infile", required=True)
    gr.add_argument("--move", required=True)
    gr.set_defaults(func=cmd_ghs)
    gc = gs.add_parser("compare", help="compare two GHSs")
    gc.add_argument("a")
    gc.add_argument("b")
    gc.set_defaults(func=cmd_ghs)

    p = sub.add_parser("sog", help="sequences of GHSs")
    ss = p.add_subparsers(dest="action", required=True)
    sf = ss.add_parser("flatten")
    sf.add_argument("--start", required=True,
                    help="inventory label or GHS JSON")
    sf.add_argument("--end", required=True)
    sf.add_argument("--oracle", required=True)
    sf.add_argument("--budget", type=int, default=100000)
    sf.set_defaults(func=cmd_sog)
    sv = ss.add_parser("verify")
    sv.add_argument("--in", dest="infile", required=True)
    sv.set_defaults(func=cmd_sog)

    p = sub.add_parser("distance", help="distance between splittings")
    p.add_argument("--diagram", required=True)
    p.add_argument("--edge1", required=True,
                   help="JSON pair of curves (file or inline)")
    p.add_argument("--edge2", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("proptest", help="randomized property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=int, default=200)
    p.set_defaults(func=cmd_proptest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _config_of(args)
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_SCOPED
    except INPUT_ERRORS as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
