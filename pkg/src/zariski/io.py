"""Lattice files and exact result documents.

Lattice files are JSON objects::

    {"name": "ruled-e2", "rank": 2, "gram": [[-2, 1], [1, 0]],
     "curves": ["C0", "f"], "k_dot": null}

Only ``gram`` is required.  Rationals are always written as strings
(``"1/2"``, ``"3"``) so that no JSON reader turns them into floats.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__
from .lattice import LatticeError, SurfaceLattice


def _int_matrix(gram: Any) -> list[list[int]]:
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise LatticeError("shape: gram must be a list of rows")
    for row in gram:
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise LatticeError(f"shape: gram entries must be integers, got {v!r}")
    return gram


def lattice_from_dict(data: Any) -> SurfaceLattice:
    if not isinstance(data, dict):
        raise LatticeError("lattice file must be a JSON object")
    if "gram" not in data:
        raise LatticeError("shape: missing 'gram'")
    gram = _int_matrix(data["gram"])
    rank = data.get("rank", len(gram))
    if rank != len(gram):
        raise LatticeError(f"shape: rank {rank} but gram has {len(gram)} rows")
    curves = data.get("curves") or ()
    k_dot = data.get("k_dot")
    if k_dot is not None:
        _int_matrix([k_dot])
    return SurfaceLattice(gram, tuple(curves), k_dot, name=str(data.get("name", "")))


def parse_lattice(text: str) -> SurfaceLattice:
    """Validated lattice from JSON text; raises ``LatticeError`` naming the first violation."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeError(f"malformed JSON: {exc}") from None
    return lattice_from_dict(data)


def load_lattice(path: str | Path) -> SurfaceLattice:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LatticeError(f"cannot read {path}: {exc.strerror}") from None
    lat = parse_lattice(text)
    if not lat.name:
        lat = dataclasses.replace(lat, name=path.stem)
    return lat


def lattice_to_dict(lat: SurfaceLattice) -> dict:
    return {
        "name": lat.name,
        "rank": lat.rank,
        "gram": [list(r) for r in lat.gram],
        "curves": list(lat.curve_names),
        "k_dot": None if lat.k_dot is None else list(lat.k_dot),
    }


def render_rational(q: Fraction | int) -> str:
    return str(Fraction(q))


def parse_rational(token: str) -> Fraction:
    token = token.strip()
    if not token or any(c not in "0123456789-/" for c in token):
        raise ValueError(f"not an exact rational: {token!r}")
    return Fraction(token)


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, SurfaceLattice):
        return lattice_to_dict(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot render {type(obj).__name__}")


def result_document(operation: str, inputs: dict, result: dict) -> dict:
    return {
        "version": __version__,
        "operation": operation,
        "input": to_jsonable(inputs),
        "result": to_jsonable(result),
    }


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _flatten(prefix: str, obj: Any, out: list[tuple[str, str]]):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, out)
    elif isinstance(obj, list):
        out.append((prefix, "(" + ", ".join(str(v) for v in obj) + ")"))
    else:
        out.append((prefix, "-" if obj is None else str(obj)))


def dumps_table(doc: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", doc, rows)
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)
