"""JSON interchange for algebras, classifications and racks.

Scalars travel as ``[numerator, denominator]`` (rationals) or
``{"re": [n, d], "im": [n, d]}`` (Gaussian rationals). Basis indices in
documents are 1-based.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import LeibnizAlgebra
from .exactla import GaussianRational, Matrix
from .exactla.scalar import FIELDS, QI, to_field


class DocumentError(ValueError):
    """Malformed JSON document."""


def scalar_to_json(v) -> Any:
    if isinstance(v, GaussianRational):
        return {"re": [v.re.numerator, v.re.denominator],
                "im": [v.im.numerator, v.im.denominator]}
    v = Fraction(v)
    return [v.numerator, v.denominator]


def _fraction_from_json(obj) -> Fraction:
    if isinstance(obj, bool):
        raise DocumentError(f"invalid rational {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"invalid rational {obj!r}") from exc
    if (isinstance(obj, list) and len(obj) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in obj)):
        if obj[1] == 0:
            raise DocumentError("zero denominator")
        return Fraction(obj[0], obj[1])
    raise DocumentError(f"invalid rational {obj!r}")


def scalar_from_json(obj, field: str):
    if isinstance(obj, dict):
        if set(obj) != {"re", "im"}:
            raise DocumentError(f"invalid Gaussian rational {obj!r}")
        v = GaussianRational(_fraction_from_json(obj["re"]), _fraction_from_json(obj["im"]))
    else:
        v = _fraction_from_json(obj)
    try:
        return to_field(v, field)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def algebra_to_doc(L: LeibnizAlgebra) -> dict:
    doc: dict[str, Any] = {"dim": L.dim, "field": L.field, "brackets": []}
    for (i, j), v in L.brackets.items():
        doc["brackets"].append({"i": i + 1, "j": j + 1,
                                "coeffs": [scalar_to_json(c) for c in v]})
    if L.name is not None:
        doc["name"] = L.name
    return doc


def algebra_from_doc(doc: Any) -> LeibnizAlgebra:
    if not isinstance(doc, dict):
        raise DocumentError("algebra document must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
        raise DocumentError(f"'dim' must be a non-negative integer, got {dim!r}")
    field = doc.get("field", "Q")
    if field not in FIELDS:
        raise DocumentError(f"'field' must be one of {FIELDS}, got {field!r}")
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise DocumentError("'brackets' must be a list")
    br = {}
    for e in entries:
        if not isinstance(e, dict) or not {"i", "j", "coeffs"} <= set(e):
            raise DocumentError(f"bracket entry needs i, j, coeffs: {e!r}")
        i, j, coeffs = e["i"], e["j"], e["coeffs"]
        if not all(isinstance(t, int) and not isinstance(t, bool) for t in (i, j)):
            raise DocumentError("bracket indices must be integers")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DocumentError(f"bracket index ({i}, {j}) out of range 1..{dim}")
        if not isinstance(coeffs, list) or len(coeffs) != dim:
            raise DocumentError(f"bracket [{i},{j}] needs {dim} coefficients")
        if (i - 1, j - 1) in br:
            raise DocumentError(f"duplicate bracket entry ({i}, {j})")
        br[(i - 1, j - 1)] = tuple(scalar_from_json(c, field) for c in coeffs)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    try:
        return LeibnizAlgebra(dim, br, field, name)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def matrix_to_json(M: Matrix) -> list:
    return [[scalar_to_json(v) for v in r] for r in M.rows]


def matrix_from_json(obj, field: str | None = None) -> Matrix:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise DocumentError("matrix must be a list of rows")
    if field is None:
        field = QI if any(isinstance(v, dict) or (isinstance(v, str) and "i" in v)
                          for r in obj for v in r) else "Q"
    rows = []
    for r in obj:
        row = []
        for v in r:
            if isinstance(v, str) and "i" in v:
                from .exactla import parse_scalar
                try:
                    row.append(to_field(parse_scalar(v), field))
                except ValueError as exc:
                    raise DocumentError(str(exc)) from exc
            else:
                row.append(scalar_from_json(v, field))
        rows.append(row)
    try:
        return Matrix(rows, field)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def dumps(doc: Any) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc


RACK_KIND = "affine-rack"


def rack_to_doc(R) -> dict:
    """Affine rack document: adapted basis (rows) and one cocycle matrix per central coordinate."""
    doc: dict[str, Any] = {"kind": RACK_KIND, "field": R.field, "m": R.m,
                           "omega": [matrix_to_json(W) for W in R.omega]}
    if R.basis is not None:
        doc["basis"] = matrix_to_json(R.basis)
    if R.name is not None:
        doc["name"] = R.name
    return doc


def rack_from_doc(doc: Any):
    from .rack import AffineModel
    if not isinstance(doc, dict) or doc.get("kind") != RACK_KIND:
        raise DocumentError(f"expected a document with \"kind\": \"{RACK_KIND}\"")
    field = doc.get("field", "Q")
    if field not in FIELDS:
        raise DocumentError(f"'field' must be one of {FIELDS}, got {field!r}")
    m = doc.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DocumentError("'m' must be a non-negative integer")
    omega_doc = doc.get("omega")
    if not isinstance(omega_doc, list):
        raise DocumentError("'omega' must be a list of matrices")
    omega = []
    for W in omega_doc:
        M = matrix_from_json(W, field) if W else Matrix([], field, ncols=0)
        if M.shape != (m, m):
            raise DocumentError(f"cocycle matrix has shape {M.shape}, expected {(m, m)}")
        omega.append(M)
    n = m + len(omega)
    basis = None
    if "basis" in doc:
        basis = matrix_from_json(doc["basis"], field) if n else Matrix([], field, ncols=0)
        if basis.shape != (n, n) or basis.rank() != n:
            raise DocumentError("'basis' must be an invertible square matrix of the rack dimension")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError("'name' must be a string")
    return AffineModel(m, tuple(omega), field, basis, name)
