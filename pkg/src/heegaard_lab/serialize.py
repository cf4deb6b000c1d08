"""JSON wire formats for curves, diagrams, GHSs, moves, SOGs, and oracles.

All emitters produce deterministic, key-sorted JSON; all parsers reject
unknown fields.
"""

from __future__ import annotations

import json
from typing import Any

from .ghs import (
    GHS,
    CompressionDescriptor,
    Destabilization,
    Move,
    WeakReduction,
    collection,
)
from .handlebody import HeegaardDiagram, validate_cut_system
from .sog import SOG, SOGStep, InventoryOracle
from .surface import CurveClass, ModelSurface, normalize


class FormatError(ValueError):
    pass


def _check_keys(data: dict, required: set, optional: set = frozenset()):
    if not isinstance(data, dict):
        raise FormatError(f"expected an object, got {type(data).__name__}")
    keys = set(data)
    missing = required - keys
    unknown = keys - required - optional
    if missing:
        raise FormatError(f"missing fields {sorted(missing)}")
    if unknown:
        raise FormatError(f"unknown fields {sorted(unknown)}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- curves -------------------------------------------------------------------


def curve_to_jsonable(c: CurveClass) -> dict:
    if c.genus == 1:
        s = c.slope()
        return {"slope": [s.p, s.q]}
    return {"genus": c.genus, "coords": list(c.coords)}


def curve_from_jsonable(data: dict) -> CurveClass:
    if "slope" in data:
        _check_keys(data, {"slope"})
        p, q = data["slope"]
        return CurveClass.from_slope(int(p), int(q))
    _check_keys(data, {"genus", "coords"})
    result = normalize(int(data["genus"]), data["coords"])
    if not isinstance(result, CurveClass):
        raise FormatError("coords carry a multicurve, not a single curve")
    return result


# -- diagrams -----------------------------------------------------------------


def diagram_to_jsonable(d: HeegaardDiagram) -> dict:
    return {
        "genus": d.genus,
        "red": [curve_to_jsonable(c) for c in d.red.curves],
        "blue": [curve_to_jsonable(c) for c in d.blue.curves],
    }


def diagram_from_jsonable(data: dict) -> HeegaardDiagram:
    _check_keys(data, {"genus", "red", "blue"})
    genus = int(data["genus"])
    surface = ModelSurface(genus)
    red = validate_cut_system(
        surface, [curve_from_jsonable(c) for c in data["red"]])
    blue = validate_cut_system(
        surface, [curve_from_jsonable(c) for c in data["blue"]])
    return HeegaardDiagram(surface, red, blue)


# -- GHSs and moves -----------------------------------------------------------


def ghs_to_jsonable(g: GHS) -> dict:
    return {"levels": [list(level) for level in g.levels],
            "boundary": [True, True]}


def ghs_from_jsonable(data: dict) -> GHS:
    _check_keys(data, {"levels"}, {"boundary"})
    boundary = data.get("boundary", [True, True])
    if boundary != [True, True]:
        raise FormatError("the first and last levels are always boundary")
    return GHS.of(data["levels"])


def _descriptor_to_jsonable(d: CompressionDescriptor) -> dict:
    kind: Any = "nonsep" if d.kind[0] == "nonsep" else list(d.kind)
    return {"side": d.side, "target_genus": d.target_genus, "kind": kind}


def _descriptor_from_jsonable(data: dict) -> CompressionDescriptor:
    _check_keys(data, {"side", "target_genus", "kind"})
    kind = data["kind"]
    if kind == "nonsep":
        parsed = ("nonsep",)
    elif isinstance(kind, list) and len(kind) == 3 and kind[0] == "sep":
        parsed = ("sep", int(kind[1]), int(kind[2]))
    else:
        raise FormatError(f"unknown compression kind {kind!r}")
    return CompressionDescriptor(data["side"], int(data["target_genus"]), parsed)


def move_to_jsonable(m: Move) -> dict:
    if isinstance(m, WeakReduction):
        return {
            "type": "weak_reduction",
            "thick_index": m.thick_index,
            "D": _descriptor_to_jsonable(m.d),
            "E": _descriptor_to_jsonable(m.e),
            "F_DE": list(m.f_de),
        }
    return {
        "type": "destabilization",
        "thick_index": m.thick_index,
        "target_genus": m.target_genus,
        "remove": m.remove,
    }


def move_from_jsonable(data: dict) -> Move:
    if not isinstance(data, dict) or "type" not in data:
        raise FormatError("a move needs a 'type' field")
    if data["type"] == "weak_reduction":
        _check_keys(data, {"type", "thick_index", "D", "E", "F_DE"})
        return WeakReduction(
            int(data["thick_index"]),
            _descriptor_from_jsonable(data["D"]),
            _descriptor_from_jsonable(data["E"]),
            collection(data["F_DE"]),
        )
    if data["type"] == "destabilization":
        _check_keys(data, {"type", "thick_index", "target_genus"}, {"remove"})
        return Destabilization(int(data["thick_index"]),
                               int(data["target_genus"]),
                               data.get("remove", "right"))
    raise FormatError(f"unknown move type {data['type']!r}")


# -- SOGs and oracles ---------------------------------------------------------


def sog_to_jsonable(s: SOG) -> dict:
    out = {
        "ghss": [ghs_to_jsonable(g) for g in s.ghss],
        "steps": [{"src": st.src, "move": move_to_jsonable(st.move)}
                  for st in s.steps],
    }
    if s.labels is not None:
        out["labels"] = list(s.labels)
    return out


def sog_from_jsonable(data: dict) -> SOG:
    _check_keys(data, {"ghss", "steps"}, {"labels"})
    ghss = [ghs_from_jsonable(g) for g in data["ghss"]]
    steps = []
    for st in data["steps"]:
        _check_keys(st, {"src", "move"})
        steps.append(SOGStep(int(st["src"]), move_from_jsonable(st["move"])))
    return SOG.of(ghss, steps, data.get("labels"))


def oracle_from_jsonable(data: dict) -> InventoryOracle:
    _check_keys(data, {"splittings", "stabilize"}, {"boundary"})
    return InventoryOracle.from_jsonable(data)
