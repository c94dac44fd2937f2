"""Lossless JSON encoding of scalars, tensors, fields and Lorentz maps.

Rationals always travel as strings (``"p/q"``, ``"p/q+r/s*i"``); nothing is
ever written as a JSON float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .algebra import AntisymTensor
from .fields import ExpField, WaveCovector
from .lorentz import LorentzMap, build_map
from .scalars import ComplexRational, parse_rational

__all__ = [
    "scalar_to_json",
    "scalar_from_json",
    "tensor_to_json",
    "tensor_from_json",
    "field_to_json",
    "field_from_json",
    "map_from_json",
    "map_to_json",
]


def scalar_to_json(z: ComplexRational | Fraction | int) -> str:
    return str(z)


def scalar_from_json(obj: Any) -> ComplexRational:
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise ValueError(f"scalars must be strings like \"p/q\" or \"p/q+r/s*i\", got {obj!r}")
    if isinstance(obj, int):
        return ComplexRational(obj)
    return ComplexRational.parse(obj)


def rational_from_json(obj: Any) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise ValueError(f"rationals must be strings like \"p/q\", got {obj!r}")
    return Fraction(obj) if isinstance(obj, int) else parse_rational(obj)


def tensor_to_json(q: AntisymTensor) -> dict:
    return {"rank": q.rank, "entries": [[list(k), str(v)] for k, v in q.items()]}


def tensor_from_json(obj: Any) -> AntisymTensor:
    if not isinstance(obj, dict) or "rank" not in obj:
        raise ValueError("a tensor is an object {\"rank\": q, \"entries\": [[indices, scalar], ...]}")
    rank = obj["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise ValueError(f"tensor rank must be an integer, got {rank!r}")
    entries = obj.get("entries", [])
    if not isinstance(entries, list):
        raise ValueError("tensor entries must be a list")
    comps: dict[tuple, ComplexRational] = {}
    for n, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 2 and isinstance(entry[0], list)):
            raise ValueError(f"entries[{n}] must be [[indices...], scalar]")
        idx = tuple(entry[0])
        if any(isinstance(i, bool) or not isinstance(i, int) for i in idx):
            raise ValueError(f"entries[{n}] indices must be integers")
        if idx in comps:
            raise ValueError(f"entries[{n}] repeats index tuple {list(idx)}")
        comps[idx] = scalar_from_json(entry[1])
    return AntisymTensor(rank, comps)


def field_to_json(f: ExpField) -> dict:
    return {
        "rank": f.rank,
        "orientation": f.orientation,
        "modes": [{"k": [str(a) for a in k], "coeff": tensor_to_json(c)} for k, c in f.modes()],
    }


def field_from_json(obj: Any) -> ExpField:
    if not isinstance(obj, dict) or "rank" not in obj:
        raise ValueError("a field is an object {\"rank\": q, \"modes\": [{\"k\": [...], \"coeff\": {...}}]}")
    rank = obj["rank"]
    orientation = obj.get("orientation", 1)
    if orientation not in (1, -1):
        raise ValueError(f"orientation must be 1 or -1, got {orientation!r}")
    modes = obj.get("modes", [])
    if not isinstance(modes, list):
        raise ValueError("field modes must be a list")
    pairs = []
    seen = set()
    for n, m in enumerate(modes):
        if not isinstance(m, dict) or "k" not in m or "coeff" not in m:
            raise ValueError(f"modes[{n}] must be {{\"k\": [...], \"coeff\": {{...}}}}")
        if not isinstance(m["k"], list) or len(m["k"]) != 4:
            raise ValueError(f"modes[{n}].k must list four rationals")
        k = WaveCovector(*(rational_from_json(a) for a in m["k"]))
        if k in seen:
            raise ValueError(f"modes[{n}] repeats wave covector {m['k']}")
        seen.add(k)
        try:
            c = tensor_from_json(m["coeff"])
        except ValueError as exc:
            raise ValueError(f"modes[{n}].coeff: {exc}") from exc
        if c.rank != rank:
            raise ValueError(f"modes[{n}].coeff has rank {c.rank}, field has rank {rank}")
        pairs.append((k, c))
    return ExpField(rank, pairs, orientation)


def map_from_json(obj: Any) -> LorentzMap:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("a map is an object {\"kind\": ..., \"param\": [...]}")
    param = obj.get("param")
    if param is not None:
        if not isinstance(param, list):
            raise ValueError("map param must be a list of rational strings")
        param = [rational_from_json(p) for p in param]
    return build_map(obj["kind"], param)


def map_to_json(lmap: LorentzMap) -> dict:
    return {
        "label": lmap.label,
        "matrix": [[str(x) for x in row] for row in lmap.matrix],
        "orientation": lmap.orientation,
        "orthochronous": bool(lmap.orthochronous),
    }
