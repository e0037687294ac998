"""JSON file formats for complexes and reports.

Writers are byte-stable: facets only, every array sorted, keys sorted,
fixed indentation, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complexes import SimplicialComplex
from .deleted import CellComplex, Z2Complex


def dumps_stable(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True,
                      ensure_ascii=False) + "\n"


def complex_to_payload(K: SimplicialComplex) -> dict:
    return {
        "name": K.name,
        "vertices": sorted(K.vertices),
        "facets": sorted([list(f) for f in K.facets()]),
    }


def z2_to_payload(X: Z2Complex) -> dict:
    payload = complex_to_payload(X.complex)
    orbits = sorted({tuple(sorted((v, w))) for v, w in X.involution.items()})
    payload["involution"] = [list(o) for o in orbits]
    return payload


def cell_complex_to_payload(C: CellComplex) -> dict:
    return {
        "name": C.name,
        "cells_by_dim": [
            [[list(s), list(t)] for s, t in level] for level in C.cells
        ],
    }


def write_complex(K: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(dumps_stable(complex_to_payload(K)),
                          encoding="utf-8")


def write_z2(X: Z2Complex, path: str | Path) -> None:
    Path(path).write_text(dumps_stable(z2_to_payload(X)), encoding="utf-8")


def write_cell_complex(C: CellComplex, path: str | Path) -> None:
    Path(path).write_text(dumps_stable(cell_complex_to_payload(C)),
                          encoding="utf-8")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def complex_from_payload(payload: dict) -> SimplicialComplex:
    _require(isinstance(payload, dict), "complex file must hold an object")
    name = payload.get("name")
    vertices = payload.get("vertices")
    facets = payload.get("facets")
    _require(isinstance(name, str), '"name" must be a string')
    _require(isinstance(vertices, list)
             and all(isinstance(v, str) for v in vertices),
             '"vertices" must be an array of strings')
    _require(isinstance(facets, list), '"facets" must be an array')
    vset = set(vertices)
    _require(len(vset) == len(vertices), "repeated vertex label")
    for f in facets:
        _require(isinstance(f, list) and f
                 and all(isinstance(v, str) for v in f),
                 "each facet must be a nonempty array of strings")
        _require(set(f) <= vset, f"facet {f} uses unknown vertices")
    generators = list(facets) + [[v] for v in vertices]
    return SimplicialComplex.from_facets(name, generators)


def z2_from_payload(payload: dict) -> Z2Complex:
    K = complex_from_payload(payload)
    orbits = payload.get("involution")
    _require(isinstance(orbits, list), '"involution" must be an array')
    T: dict[str, str] = {}
    for o in orbits:
        _require(isinstance(o, list) and len(o) == 2
                 and all(isinstance(v, str) for v in o),
                 "each orbit must be a 2-element array of labels")
        v, w = o
        _require(v not in T and w not in T, f"vertex repeated in orbits: {o}")
        T[v] = w
        T[w] = v
    return Z2Complex(K, T)


def read_complex(path: str | Path) -> SimplicialComplex:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return complex_from_payload(payload)


def read_z2(path: str | Path) -> Z2Complex:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return z2_from_payload(payload)


def read_any(path: str | Path) -> SimplicialComplex | Z2Complex:
    """Complex or Z2Complex depending on the presence of "involution"."""
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if "involution" in payload:
        return z2_from_payload(payload)
    return complex_from_payload(payload)


def strip_timings(payload: Any) -> Any:
    """Copy of a report with every "timings_ms" field removed (recursively);
    what remains must be byte-stable across runs and thread counts."""
    if isinstance(payload, dict):
        return {k: strip_timings(v) for k, v in payload.items()
                if k != "timings_ms"}
    if isinstance(payload, list):
        return [strip_timings(v) for v in payload]
    return payload
