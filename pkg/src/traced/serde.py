"""JSON (de)serialization of objects, morphisms and triples.

Used for counterexample storage in suite reports (`--replay`) and for the
pinned regression inputs shipped with the package.  Rationals are strings
"p/q", objects are their payloads, morphisms are tagged by kind.
"""

from __future__ import annotations

from .core import Morphism, ObjectRef, get_instance
from .matrices import RatMatrix
from .thickened import ThickTriple
from ._rat import parse_rat, rat_str


def dump_value(v):
    if isinstance(v, ObjectRef):
        return {"kind": "object", "instance": v.instance_id, "payload": list(v.payload)}
    if isinstance(v, Morphism):
        return _dump_morphism(v)
    if isinstance(v, ThickTriple):
        return {
            "kind": "triple",
            "dom": dump_value(v.dom),
            "cod": dump_value(v.cod),
            "z": dump_value(v.z),
            "t": dump_value(v.t),
            "b": dump_value(v.b),
        }
    if isinstance(v, bool):
        return {"kind": "bool", "value": v}
    if isinstance(v, int):
        return {"kind": "int", "value": v}
    if isinstance(v, str):
        return {"kind": "str", "value": v}
    return {"kind": "rat", "value": rat_str(v)}


def _dump_morphism(m: Morphism):
    base = {
        "instance": m.instance_id,
        "source": list(m.source.payload),
        "target": list(m.target.payload),
    }
    if isinstance(m.payload, RatMatrix):
        base["kind"] = "matrix-mor"
        base["rows"] = m.payload.rows
        base["cols"] = m.payload.cols
        base["entries"] = {f"{i},{j}": rat_str(v) for (i, j), v in sorted(m.payload.entries.items())}
        return base
    from .bordism import Bord, Iso

    if isinstance(m.payload, Iso):
        base["kind"] = "iso-mor"
        base["mapping"] = [list(p) for p in m.payload.mapping]
        return base
    if isinstance(m.payload, Bord):
        base["kind"] = "bord-mor"
        base["arcs"] = [[list(a), list(b), rat_str(l)] for (a, b, l) in m.payload.arcs]
        base["circles"] = [rat_str(c) for c in m.payload.circles]
        return base
    raise TypeError(f"cannot serialize morphism payload {type(m.payload)!r}")


def load_value(data):
    kind = data["kind"]
    if kind == "object":
        inst = get_instance(data["instance"])
        payload = data["payload"]
        if data["instance"] == "rbord1":
            return inst.points(payload)
        return inst.obj(payload)
    if kind == "matrix-mor":
        inst = get_instance(data["instance"])
        src = inst.obj(data["source"])
        tgt = inst.obj(data["target"])
        entries = {}
        for key, v in data["entries"].items():
            i, j = key.split(",")
            entries[(int(i), int(j))] = parse_rat(v)
        return inst.mor(src, tgt, RatMatrix(data["rows"], data["cols"], entries))
    if kind == "iso-mor":
        inst = get_instance(data["instance"])
        src = inst.points(data["source"])
        tgt = inst.points(data["target"])
        return inst.iso_mor(src, tgt, dict(tuple(p) for p in data["mapping"]))
    if kind == "bord-mor":
        inst = get_instance(data["instance"])
        src = inst.points(data["source"])
        tgt = inst.points(data["target"])
        arcs = [((a[0], a[1]), (b[0], b[1]), parse_rat(l)) for (a, b, l) in data["arcs"]]
        return inst.bord_mor(src, tgt, arcs, [parse_rat(c) for c in data["circles"]])
    if kind == "triple":
        return ThickTriple(
            dom=load_value(data["dom"]),
            cod=load_value(data["cod"]),
            z=load_value(data["z"]),
            t=load_value(data["t"]),
            b=load_value(data["b"]),
        )
    if kind == "bool":
        return data["value"]
    if kind == "int":
        return data["value"]
    if kind == "str":
        return data["value"]
    if kind == "rat":
        return parse_rat(data["value"])
    raise TypeError(f"cannot deserialize kind {kind!r}")


def dump_inputs(inputs: dict) -> dict:
    return {name: dump_value(v) for name, v in inputs.items()}


def load_inputs(data: dict) -> dict:
    return {name: load_value(v) for name, v in data.items()}
