"""JSON interchange for complexes and quivers with potential, and DOT export.

Complex schema::

    {"m": 2, "polygons": [[{"arc": 1}, {"bnd": 0}, {"arc": 3}, {"arc": 2}], ...]}

Quiver-with-potential schema::

    {"m": 2, "vertices": [1, 2, 3],
     "arrows": [{"src": 1, "dst": 2, "grade": 0, "partner": 3}, ...],
     "terms": [[0, 4, 5], ...], "looped": []}

``partner`` is optional; without it arrows are paired greedily.
Serialization is canonical and byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .qp import AsymmetricInput, GradedArrow, GradedQuiver, Superpotential
from .surface import PolygonComplex, Side, canonical_form, validate

__all__ = [
    "SchemaError",
    "parse_complex",
    "serialize_complex",
    "complex_to_data",
    "complex_from_data",
    "parse_qp",
    "serialize_qp",
    "export_dot",
    "load_json",
]


class SchemaError(ValueError):
    """Malformed input; the message names the line or field at fault."""


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None


def _int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _list(value, where: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(f"{where}: expected a list, got {type(value).__name__}")
    return value


def _obj(value, where: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(f"{where}: expected an object, got {type(value).__name__}")
    return value


def complex_from_data(data, *, check: bool = True) -> PolygonComplex:
    data = _obj(data, "top level")
    if "m" not in data:
        raise SchemaError("field 'm' is missing")
    if "polygons" not in data:
        raise SchemaError("field 'polygons' is missing")
    m = _int(data["m"], "m", 1)
    polys = []
    for pi, poly in enumerate(_list(data["polygons"], "polygons")):
        sides = []
        for t, side in enumerate(_list(poly, f"polygons[{pi}]")):
            where = f"polygons[{pi}][{t}]"
            side = _obj(side, where)
            if len(side) != 1 or next(iter(side)) not in ("arc", "bnd"):
                raise SchemaError(f"{where}: expected {{\"arc\": id}} or {{\"bnd\": id}}, got {side!r}")
            kind, ident = next(iter(side.items()))
            sides.append(Side(kind, _int(ident, f"{where}.{kind}", 0)))
        polys.append(sides)
    cx = PolygonComplex(m, polys)
    if check:
        rep = validate(cx)
        if not rep.ok:
            raise SchemaError("invalid complex: " + "; ".join(rep.problems))
    return cx


def parse_complex(text: str, *, check: bool = True) -> PolygonComplex:
    return complex_from_data(load_json(text), check=check)


def complex_to_data(cx: PolygonComplex) -> dict:
    cx = canonical_form(cx)
    return {
        "m": cx.m,
        "polygons": [[{s.kind: s.id} for s in poly] for poly in cx.polygons],
    }


def serialize_complex(cx: PolygonComplex) -> str:
    """Canonical JSON (rotation-minimal polygons, sorted)."""
    data = complex_to_data(cx)
    lines = ['{"m": %d, "polygons": [' % data["m"]]
    rows = [json.dumps(poly) for poly in data["polygons"]]
    lines += ["  " + r + ("," if k < len(rows) - 1 else "") for k, r in enumerate(rows)]
    lines.append("]}")
    return "\n".join(lines) + "\n"


def parse_qp(text: str) -> tuple[GradedQuiver, Superpotential]:
    data = _obj(load_json(text), "top level")
    for key in ("m", "arrows"):
        if key not in data:
            raise SchemaError(f"field {key!r} is missing")
    m = _int(data["m"], "m", 1)
    arrows = []
    partner = []
    for x, a in enumerate(_list(data["arrows"], "arrows")):
        where = f"arrows[{x}]"
        a = _obj(a, where)
        for key in ("src", "dst", "grade"):
            if key not in a:
                raise SchemaError(f"{where}: field {key!r} is missing")
        src, dst = _int(a["src"], f"{where}.src", 0), _int(a["dst"], f"{where}.dst", 0)
        if src == dst:
            raise SchemaError(f"{where}: loops are not allowed")
        arrows.append(GradedArrow(src, dst, _int(a["grade"], f"{where}.grade")))
        partner.append(a.get("partner"))
    vertices = data.get("vertices")
    if vertices is None:
        vertices = sorted({a.src for a in arrows} | {a.dst for a in arrows})
    vertices = [_int(v, f"vertices[{k}]", 0) for k, v in enumerate(_list(vertices, "vertices"))]
    missing = {a.src for a in arrows} | {a.dst for a in arrows}
    missing -= set(vertices)
    if missing:
        raise SchemaError(f"arrows use undeclared vertices {sorted(missing)}")
    if all(p is None for p in partner):
        part = None
    elif any(p is None for p in partner):
        raise SchemaError("either every arrow has 'partner' or none does")
    else:
        part = [_int(p, f"arrows[{x}].partner", 0) for x, p in enumerate(partner)]
        if any(p >= len(arrows) for p in part):
            raise SchemaError("partner index out of range")
    try:
        q = GradedQuiver.build(m, vertices, arrows, part, data.get("looped", ()))
    except AsymmetricInput as e:
        raise SchemaError(f"quiver is not symmetric: {e}") from None
    if not q.is_symmetric():
        raise SchemaError("quiver is not symmetric: " + "; ".join(q.symmetry_problems()))
    terms = []
    for k, t in enumerate(_list(data.get("terms", []), "terms")):
        t = [_int(x, f"terms[{k}][{n}]", 0) for n, x in enumerate(_list(t, f"terms[{k}]"))]
        if any(x >= len(arrows) for x in t):
            raise SchemaError(f"terms[{k}]: arrow index out of range")
        if any(arrows[t[n]].dst != arrows[t[(n + 1) % len(t)]].src for n in range(len(t))):
            raise SchemaError(f"terms[{k}]: arrows do not form a cycle")
        terms.append(t)
    return q, Superpotential.from_terms(terms)


def serialize_qp(q: GradedQuiver, w: Superpotential) -> str:
    data = {
        "m": q.m,
        "vertices": sorted(q.vertices),
        "arrows": [
            {"src": a.src, "dst": a.dst, "grade": a.grade, "partner": q.partner[x]}
            for x, a in enumerate(q.arrows)
        ],
        "terms": [list(t) for t in sorted(w.terms)],
        "looped": sorted(q.looped),
    }
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def export_dot(q: GradedQuiver, name: str = "Q") -> str:
    """DOT digraph; one edge per arrow labelled with its grade."""
    lines = [f"digraph {name} {{"]
    for v in sorted(q.vertices):
        lines.append(f"  {v};")
    for a in sorted(q.arrows, key=lambda a: a.key):
        lines.append(f'  {a.src} -> {a.dst} [label="{a.grade}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
