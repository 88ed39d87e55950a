"""JSON encoding: complex numbers are [re, im], vectors are arrays of those,
matrices are row-major nested arrays. Top-level documents carry
``schema_version``."""

from __future__ import annotations

import dataclasses
import enum
import json
import math

import numpy as np

from .config import SCHEMA_VERSION
from .domain import FBHDomain, Point


def cnum(x) -> list[float]:
    x = complex(x)
    return [x.real, x.imag]


def from_cnum(pair) -> complex:
    if isinstance(pair, (int, float)):
        return complex(pair)
    re, im = pair
    return complex(float(re), float(im))


def cvec(v) -> list[list[float]]:
    return [cnum(x) for x in np.asarray(v).ravel()]


def from_cvec(data) -> np.ndarray:
    return np.array([from_cnum(x) for x in data], dtype=complex)


def cmat(M) -> list[list[list[float]]]:
    return [cvec(row) for row in np.atleast_2d(M)]


def from_cmat(data) -> np.ndarray:
    rows = [from_cvec(row) for row in data]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must be nonempty and of equal length")
    return np.array(rows)


def point_to_json(p: Point) -> dict:
    return {"z": cvec(p.z), "w": cvec(p.w)}


def point_from_json(data) -> Point:
    return Point(from_cvec(data["z"]), from_cvec(data["w"]))


def domain_to_json(d: FBHDomain) -> dict:
    return {"n": d.n, "m": d.m, "mu": d.mu}


def to_jsonable(obj):
    """Recursively convert library values to plain JSON types."""
    from .automorphism import Automorphism, LinearBiholomorphism
    from .kernel import KernelValue

    if isinstance(obj, KernelValue):
        return {"value": cnum(obj.value), "tail_bound": obj.tail_bound, "terms_used": obj.terms_used}
    if isinstance(obj, Automorphism):
        return {
            "U": cmat(obj.U),
            "Uw": cmat(obj.Uw),
            "v": cvec(obj.v),
            **domain_to_json(obj.domain),
        }
    if isinstance(obj, LinearBiholomorphism):
        return {
            "source": domain_to_json(obj.source),
            "target": domain_to_json(obj.target),
            "matrix": cmat(obj.matrix),
        }
    if isinstance(obj, Point):
        return point_to_json(obj)
    if isinstance(obj, FBHDomain):
        return domain_to_json(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return cmat(obj) if obj.ndim == 2 else cvec(obj)
        return obj.tolist()
    if isinstance(obj, (complex, np.complexfloating)):
        return cnum(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def automorphism_from_json(data):
    from .automorphism import Automorphism

    d = FBHDomain(data["n"], data["m"], data["mu"])
    return Automorphism(d, from_cmat(data["U"]), from_cmat(data["Uw"]), from_cvec(data["v"]))


def dumps(obj, **kw) -> str:
    doc = to_jsonable(obj)
    if isinstance(doc, dict):
        doc = {"schema_version": SCHEMA_VERSION, **doc}
    return json.dumps(doc, sort_keys=True, **kw)
