"""JSON document formats: polytopes, direction files, skeletons,
illumination sets, verdicts and certificates.

Rationals travel as strings ("p" or "p/q"), never floats, so documents
round-trip bit-exactly and stay language-neutral.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .kernel import Vec, as_vec, format_rational, parse_rational
from .polytope import HPolytope


def vector_to_strings(v: Vec) -> list[str]:
    return [format_rational(x) for x in v]


def strings_to_vector(items: Sequence[str]) -> Vec:
    return tuple(parse_rational(s) for s in items)


def polytope_to_doc(P: HPolytope) -> dict:
    return {
        "dim": P.dim,
        "facets": [{"normal": vector_to_strings(n), "offset": format_rational(h)}
                   for n, h in zip(P.normal_set.normals, P.offsets)],
    }


def doc_to_polytope(doc) -> HPolytope:
    if not isinstance(doc, dict):
        raise InputError("polytope document must be a JSON object")
    try:
        dim = int(doc["dim"])
        facets = doc["facets"]
    except (KeyError, TypeError, ValueError) as err:
        raise InputError(f"polytope document needs 'dim' and 'facets': {err}")
    if not isinstance(facets, list) or not facets:
        raise InputError("'facets' must be a nonempty list")
    parsed = []
    for i, facet in enumerate(facets):
        try:
            normal = strings_to_vector(facet["normal"])
            offset = parse_rational(facet["offset"])
        except (KeyError, TypeError) as err:
            raise InputError(f"facet {i} is malformed: {err}", facet_index=i)
        except InputError as err:
            raise InputError(f"facet {i}: {err}", facet_index=i)
        if len(normal) != dim:
            raise InputError(
                f"facet {i}: normal has dimension {len(normal)}, expected {dim}",
                facet_index=i)
        parsed.append((normal, offset))
    return HPolytope.from_facets(dim, parsed)


def parse_polytope(text: str) -> HPolytope:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"invalid JSON: {err}")
    return doc_to_polytope(doc)


def serialize_polytope(P: HPolytope, pretty: bool = False) -> str:
    return dump(polytope_to_doc(P), pretty)


def directions_to_doc(directions: Sequence[Vec], epsilon: Fraction) -> dict:
    return {
        "epsilon": format_rational(epsilon),
        "directions": [vector_to_strings(v) for v in directions],
    }


def parse_directions(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise InputError(f"invalid JSON: {err}")
    try:
        epsilon = parse_rational(doc["epsilon"])
        directions = [strings_to_vector(v) for v in doc["directions"]]
    except (KeyError, TypeError) as err:
        raise InputError(f"directions document needs 'epsilon' and 'directions': {err}")
    if not directions:
        raise InputError("directions list is empty")
    return directions, epsilon


def skeleton_to_doc(skeleton) -> dict:
    return {
        "basis": [vector_to_strings(b) for b in skeleton.basis],
        "parts": [[vector_to_strings(x) for x in part] for part in skeleton.parts],
        "part_supports": [list(s) for s in skeleton.part_supports],
        "part_sizes": [len(part) for part in skeleton.parts],
        "product_of_part_sizes": skeleton.product_of_part_sizes,
    }


def illumination_to_doc(P: HPolytope, ill) -> dict:
    return {
        "directions": [vector_to_strings(v) for v in ill.directions],
        "epsilon": format_rational(ill.epsilon),
        "delta": format_rational(ill.delta),
        "scaled_directions": [vector_to_strings(v) for v in ill.scaled],
        "assignment": [
            {"vertex": vector_to_strings(v.point), "direction": j}
            for v, j in zip(P.vertices, ill.assignment)
        ],
    }


def reports_to_doc(reports) -> list:
    return [
        {
            "vertex": vector_to_strings(r.point),
            "direction": r.direction_index,
            "directional_ok": r.directional_ok,
            "interior_ok": r.interior_ok,
        }
        for r in reports
    ]


def certificate_to_doc(certificate) -> list:
    return [vector_to_strings(v) for v in certificate]


def dump(payload, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))
