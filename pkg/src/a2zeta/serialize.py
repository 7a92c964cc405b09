"""JSON files for complexes, representations, presentations, polynomials and reports."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .algebra import Polynomial
from .builders import TrianglePresentation
from .complex_core import QuotientComplex, build_complex, to_data
from .groups import FiniteGroup
from .rep_voltage import Representation, RepresentationError, permutation_representation


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, fixed separators, trailing newline)."""
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


# complexes


def complex_to_json(c: QuotientComplex) -> dict:
    return to_data(c)


def complex_from_json(obj: Mapping) -> QuotientComplex:
    for key in ("q", "vertices", "edges", "chambers"):
        if key not in obj:
            raise FormatError(f"complex file is missing {key!r}")
    return build_complex(obj)


def load_complex(path: str | Path) -> QuotientComplex:
    return complex_from_json(read_json(path))


def save_complex(path: str | Path, c: QuotientComplex) -> None:
    write_json(path, complex_to_json(c))


# representations


def _parse_entry(x) -> Fraction | complex:
    if isinstance(x, list):
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    raise FormatError(f"unreadable matrix entry {x!r}")


def rep_from_json(obj: Mapping, group: FiniteGroup | None = None) -> Representation:
    """Representation file: ``{"group": ..., "rep": {"type", "matrices"}}``.

    ``type`` is ``permutation`` (natural action, matrices optional), ``matrix``
    (rational strings ``"p/q"``) or ``complex`` (``[re, im]`` pairs).
    """
    if "group" not in obj:
        raise FormatError("representation file is missing 'group'")
    G = FiniteGroup.from_json(obj["group"])
    if group is not None and G != group:
        raise RepresentationError("group mismatch: the representation's group differs from the complex's voltage group")
    G = group or G
    body = obj.get("rep", {"type": "permutation"})
    kind = body.get("type", "permutation")
    if kind == "permutation":
        return permutation_representation(G)
    if kind not in ("matrix", "complex"):
        raise FormatError(f"unknown representation type {kind!r}")
    mats = {k: [[_parse_entry(x) for x in row] for row in m] for k, m in body.get("matrices", {}).items()}
    exact = kind == "matrix"
    return Representation.from_generators(G, mats, exact=exact, name=obj.get("name", kind))


def rep_to_json(rho: Representation) -> dict:
    out = rho.to_json()
    if rho.name == "permutation":
        out["rep"] = {"type": "permutation"}
    return out


def load_rep(path: str | Path, group: FiniteGroup | None = None) -> Representation:
    return rep_from_json(read_json(path), group)


def load_group(path: str | Path) -> FiniteGroup:
    obj = read_json(path)
    if "group" not in obj:
        raise FormatError("representation file is missing 'group'")
    return FiniteGroup.from_json(obj["group"])


# presentations


def presentation_to_json(T: TrianglePresentation) -> dict:
    return T.to_json()


def presentation_from_json(obj: Mapping) -> TrianglePresentation:
    return TrianglePresentation.from_json(obj)


def load_presentation(path: str | Path) -> TrianglePresentation:
    return presentation_from_json(read_json(path))


# polynomials


def poly_to_json(p) -> list:
    if isinstance(p, Polynomial):
        return p.to_strings()
    return [[float(z.real), float(z.imag)] for z in np.asarray(p, dtype=complex)]


def poly_from_json(obj: list):
    if obj and isinstance(obj[0], list):
        return np.array([complex(a, b) for a, b in obj])
    return Polynomial.from_strings(obj)
