"""Shared JSON wire formats.

Matrix:    {"rows": R, "cols": C, "entries": [[s, ...], ...]}
Operator:  {"dim": n, "terms": [{"a": <matrix>, "b": <matrix>}, ...]}

Entry strings are the canonical exact scalar forms from
:mod:`elemop.scalars` ("3", "-2/5", "1/2+3/4*i"); parsing is tolerant,
emission is canonical and whitespace-free.  Floating point never appears on
the wire.  `dumps` renders any document deterministically, so equal values
always produce byte-identical text.
"""

from __future__ import annotations

import json

from .criteria import ShiftCheckResult, TheoremCheckResult
from .errors import ParseError
from .matrix import Matrix
from .nilpotency import NilpotencyReport
from .operators import ElementaryOperator
from .scalars import GaussianRational, format_scalar, parse_scalar


def dumps(document) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, one newline."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


# ---- matrices -----------------------------------------------------------

def matrix_to_obj(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_scalar(e) for e in row] for row in m.row_list()],
    }


def matrix_from_obj(obj) -> Matrix:
    if not isinstance(obj, dict):
        raise ParseError(f"matrix document must be an object, got {type(obj).__name__}")
    missing = {"rows", "cols", "entries"} - obj.keys()
    if missing:
        raise ParseError(f"matrix document missing keys: {sorted(missing)}")
    rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows >= 1 and cols >= 1):
        raise ParseError(f"bad matrix shape: rows={rows!r}, cols={cols!r}")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} entry rows, got {_brief(entries)}")
    parsed = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"entry row {i} is not a list of {cols} scalars")
        parsed.append([_entry_scalar(e, i, j) for j, e in enumerate(row)])
    return Matrix(parsed)


def _entry_scalar(e, i: int, j: int) -> GaussianRational:
    if isinstance(e, str):
        return parse_scalar(e)
    if isinstance(e, int) and not isinstance(e, bool):
        return GaussianRational(e)
    raise ParseError(f"entry ({i}, {j}) must be a scalar string, got {e!r}")


def _brief(value) -> str:
    text = repr(value)
    return text if len(text) <= 40 else text[:37] + "..."


# ---- operators -----------------------------------------------------------

def operator_to_obj(op: ElementaryOperator) -> dict:
    return {
        "dim": op.dim,
        "terms": [{"a": matrix_to_obj(a), "b": matrix_to_obj(b)} for a, b in op.terms],
    }


def operator_from_obj(obj) -> ElementaryOperator:
    if not isinstance(obj, dict):
        raise ParseError(f"operator document must be an object, got {type(obj).__name__}")
    missing = {"dim", "terms"} - obj.keys()
    if missing:
        raise ParseError(f"operator document missing keys: {sorted(missing)}")
    dim, terms = obj["dim"], obj["terms"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"bad operator dimension: {dim!r}")
    if not isinstance(terms, list) or not terms:
        raise ParseError("operator needs a nonempty terms list")
    pairs = []
    for k, term in enumerate(terms):
        if not isinstance(term, dict) or {"a", "b"} - term.keys():
            raise ParseError(f'term {k} must be an object with "a" and "b" matrices')
        pairs.append((matrix_from_obj(term["a"]), matrix_from_obj(term["b"])))
    return ElementaryOperator(dim, tuple(pairs))


# ---- reports ---------------------------------------------------------------

def report_to_obj(report: NilpotencyReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = {
            "row": report.witness.row,
            "col": report.witness.col,
            "value": format_scalar(report.witness.value),
        }
    return {"nilpotent": report.nilpotent, "index": report.index, "witness": witness}


def check_to_obj(result: TheoremCheckResult) -> dict:
    obj = {
        "hypotheses_hold": result.hypotheses_hold,
        "hypothesis_failures": list(result.hypothesis_failures),
        "conclusion": report_to_obj(result.conclusion),
        "consistent": result.consistent,
    }
    if isinstance(result, ShiftCheckResult):
        obj["lambda"] = None if result.lam is None else format_scalar(result.lam)
        obj["mu"] = None if result.mu is None else format_scalar(result.mu)
    return obj
