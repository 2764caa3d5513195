"""Cycle files: JSON text with exact rationals as strings.

{"blocks": [m1, ..., mk],
 "facets": [{"vertices": [[rat, ...], ...],
             "rays": [[int, ...], ...],
             "lineality": [[int, ...], ...],
             "weight": non-negative int}, ...]}

Rationals are written "p/q" (or bare integers); rays and lineality are
integer vectors, normalized on load.  Serialization is canonical, so
parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cycles import BlockStructure, TropicalCycle, WeightedFacet
from .errors import InputError
from .polyhedra import Polyhedron


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {value!r}: {exc}") from exc
    raise InputError(f"not a rational: {value!r} (floats are not accepted)")


def parse_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"not an integer: {value!r}")
    return value


def rational_str(value: Fraction):
    value = Fraction(value)
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def cycle_from_dict(data) -> TropicalCycle:
    if not isinstance(data, dict):
        raise InputError("cycle file must contain a JSON object")
    try:
        blocks = BlockStructure(tuple(parse_int(b) for b in data["blocks"]))
    except KeyError:
        raise InputError('missing "blocks"') from None
    m = blocks.m
    facets = []
    for idx, entry in enumerate(data.get("facets", [])):
        verts = [[parse_rational(x) for x in v] for v in entry.get("vertices", [])]
        rays = [[parse_int(x) for x in r] for r in entry.get("rays", [])]
        lin = [[parse_int(x) for x in l] for l in entry.get("lineality", [])]
        weight = parse_int(entry.get("weight", 1))
        if weight < 0:
            raise InputError(f"facet {idx}: negative weight {weight}")
        for vec in verts + rays + lin:
            if len(vec) != m:
                raise InputError(
                    f"facet {idx}: vector length {len(vec)} != blocks sum {m}")
        if not verts:
            raise InputError(f"facet {idx}: needs at least one vertex")
        poly = Polyhedron.from_generators(m, verts, rays, lin)
        facets.append(WeightedFacet(poly, weight))
    return TropicalCycle(blocks, facets)


def cycle_to_dict(cycle: TropicalCycle) -> dict:
    facets = []
    for f in cycle.facets:
        p = f.poly
        facets.append({
            "vertices": [[rational_str(x) for x in v] for v in p.vertices],
            "rays": [list(r) for r in p.rays],
            "lineality": [list(l) for l in p.lineality],
            "weight": f.weight,
        })
    return {"blocks": list(cycle.ambient.blocks), "facets": facets}


def loads(text: str) -> TropicalCycle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON: {exc}") from exc
    return cycle_from_dict(data)


def dumps(cycle: TropicalCycle) -> str:
    return json.dumps(cycle_to_dict(cycle), indent=1, sort_keys=True) + "\n"


def load(path) -> TropicalCycle:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(path, cycle: TropicalCycle) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(cycle))
