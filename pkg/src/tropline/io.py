"""File formats: matrices (JSON or CSV), complexes (JSON) and run reports."""

from __future__ import annotations

import csv
import hashlib
import io as _io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .simplicial import SimplicialComplex
from .trop_core import TropicalMatrix


def fraction_to_json(x):
    """Integers stay bare; other rationals become ``"p/q"`` strings."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(cell):
    if isinstance(cell, bool) or isinstance(cell, float):
        raise ParseError(f"not an exact rational: {cell!r}")
    if isinstance(cell, int):
        return cell
    if not isinstance(cell, str):
        raise ParseError(f"not a rational: {cell!r}")
    try:
        f = Fraction(cell.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {cell!r}") from exc
    if "." in cell or "e" in cell.lower():
        raise ParseError(f"decimal notation is not accepted: {cell!r}")
    return f.numerator if f.denominator == 1 else f


def matrix_to_json(M: TropicalMatrix) -> dict:
    return {"rows": M.d, "cols": M.n, "entries": [[fraction_to_json(x) for x in row] for row in M.entries]}


def matrix_from_json(obj) -> TropicalMatrix:
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError("matrix JSON needs 'rows', 'cols' and 'entries'") from exc
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ParseError(f"entries do not form a {rows}x{cols} grid")
    return TropicalMatrix(tuple(tuple(parse_rational(c) for c in r) for r in entries))


def matrix_from_csv(text: str) -> TropicalMatrix:
    rows = [r for r in csv.reader(_io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty CSV")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged CSV")
    return TropicalMatrix(tuple(tuple(parse_rational(c) for c in r) for r in rows))


def matrix_to_csv(M: TropicalMatrix) -> str:
    buf = _io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(
        [[str(fraction_to_json(x)) for x in row] for row in M.entries]
    )
    return buf.getvalue()


def parse_matrix(text: str) -> TropicalMatrix:
    """JSON if the text starts with ``{``, CSV otherwise."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return matrix_from_json(obj)
    return matrix_from_csv(text)


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def complex_to_json(K: SimplicialComplex) -> dict:
    out = {"facets": [list(f) for f in K.facets]}
    if K.vertices is not None:
        out["vertices"] = [[list(row) for row in v] for v in K.vertices]
    return {k: out[k] for k in sorted(out, reverse=True)}  # "vertices" first


def complex_from_json(obj) -> SimplicialComplex:
    try:
        facets = [tuple(int(v) for v in f) for f in obj["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError("complex JSON needs integer 'facets'") from exc
    verts = obj.get("vertices")
    if verts is not None:
        verts = [tuple(tuple(int(x) for x in row) for row in v) for v in verts]
        count = len(verts)
    else:
        count = 1 + max((v for f in facets for v in f), default=-1)
    if any(v < 0 or v >= count for f in facets for v in f):
        raise ParseError("facet refers to a missing vertex")
    return SimplicialComplex(count, tuple(facets), verts)


def dumps(obj) -> str:
    """Deterministic JSON text: fixed indentation and key order."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class Check:
    name: str
    expected: object
    computed: object
    passed: bool | None  # None: not checked

    def line(self) -> str:
        status = "PASS" if self.passed else ("FAIL" if self.passed is False else "SKIP")
        return f"{status}  {self.name}: expected {self.expected}; computed {self.computed}"


@dataclass
class RunReport:
    """What a CLI command did and found.  Timing is kept out of the JSON so reruns are byte-identical."""

    command: list
    input_digest: str | None = None
    results: object = None
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def to_json(self) -> dict:
        out = {"command": self.command, "input_digest": self.input_digest, "results": self.results}
        if self.checks:
            out["checks"] = [
                {"name": c.name, "expected": c.expected, "computed": c.computed, "pass": c.passed}
                for c in self.checks
            ]
        return out
