"""

    LevyFock: Lévy processes, cocycles and Fock space

    Serialization module

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module reads and writes the documents the package exchanges
    with the outside world:

    triplet:  A JSON object with the keys b, a, convention, atoms, density
              and quadrature, see doc/triplets.rst. Unknown keys are errors.
    grid:     A CSV table of a grid function with the columns t, re, im,
              optionally preceded by a header line.
    tables:   CSV tables of kernels, realizations, paths and ECF reports,
              all floats written with 17 significant digits.
    json:     Reports and matrices as JSON; complex numbers are written
              as [re, im] pairs, and non-finite floats as null.

"""

from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    TextIO,
    Tuple,
    Union,
)

import csv
import hashlib
import io
import json
import logging
import math
import os
from enum import Enum
from functools import partial

import numpy as np

from .basics import InputError, LevyFockError, ParameterError
from .exponent import LevyTriplet
from .fock import CoherentSpan, CoherentVector
from .gns import CocycleRealization, KernelMatrix
from .posdef import GridFunction
from .sampler import EcfReport, SamplePath


logger = logging.getLogger(__name__)

# Configure our JSON dump function
json_dumps = partial(json.dumps, ensure_ascii=False, separators=(",", ":"))

Row = List[str]
Table = Tuple[Row, List[Row]]

GRID_HEADER = ["t", "re", "im"]

REFERENCE_JSONPATH = os.path.join(
    os.path.dirname(__file__), "resources", "reference_triplets.json"
)
_REFERENCES: Optional[Dict[str, Any]] = None


def fmt(x: float) -> str:
    """Format a float with 17 significant digits, so that it round-trips"""
    return "{0:.17g}".format(float(x))


def complex_pair(z: complex) -> List[Optional[float]]:
    return [_finite(z.real), _finite(z.imag)]


def _finite(x: float) -> Optional[float]:
    x = float(x)
    return x if math.isfinite(x) else None


def jsonable(obj: Any) -> Any:
    """Convert numpy values, complex numbers and enums into plain JSON data"""
    if obj is None or isinstance(obj, (bool, str, np.bool_)):
        return bool(obj) if isinstance(obj, np.bool_) else obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _finite(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_pair(complex(obj))
    if isinstance(obj, Enum):
        return str(obj)
    if isinstance(obj, np.ndarray):
        return [jsonable(x) for x in obj.tolist()]
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, LevyFockError):
        return obj.to_dict()
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    raise TypeError("Cannot serialize {0!r} as JSON".format(obj))


def dumps(obj: Any, indent: Optional[int] = None) -> str:
    """Serialize obj as JSON, compact unless an indent is given"""
    data = jsonable(obj)
    if indent is None:
        return json_dumps(data)
    return json.dumps(data, ensure_ascii=False, indent=indent)


def digest(data: Union[str, bytes]) -> str:
    """The SHA-256 hex digest of a document"""
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


# Triplet documents


def loads_triplet(text: str, source: str = "<input>") -> LevyTriplet:
    """Parse a triplet from the text of a JSON document"""
    try:
        d = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(
            "{0}: malformed JSON at line {1}, column {2}: {3}".format(
                source, e.lineno, e.colno, e.msg
            )
        )
    return LevyTriplet.from_dict(d)


def load_triplet(path: str) -> LevyTriplet:
    """Read a triplet from a JSON file"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise InputError("Unable to read {0}: {1}".format(path, e))
    return loads_triplet(text, path)


def dumps_triplet(trip: LevyTriplet, indent: Optional[int] = 2) -> str:
    return dumps(trip.to_dict(), indent)


def _load_references() -> Dict[str, Any]:
    global _REFERENCES
    if _REFERENCES is None:
        with open(REFERENCE_JSONPATH, encoding="utf-8") as f:
            _REFERENCES = json.load(f)
    return _REFERENCES


def reference_names() -> List[str]:
    return sorted(_load_references())


def reference_document(name: str) -> Dict[str, Any]:
    refs = _load_references()
    if name not in refs:
        raise ParameterError(
            "Unknown reference triplet '{0}'; expected one of {1}".format(
                name, ", ".join(sorted(refs))
            )
        )
    return dict(refs[name])


def reference_triplet(name: str) -> LevyTriplet:
    """One of the built-in reference triplets: gaussian, poisson, mixed,
    power or point_mass"""
    return LevyTriplet.from_dict(reference_document(name))


# Grid functions


def _parse_float(val: str, what: str, lineno: int, source: str) -> float:
    try:
        return float(val)
    except ValueError:
        raise InputError(
            "{0}, line {1}: {2} '{3}' is not a number".format(source, lineno, what, val)
        )


def read_grid_function(
    lines: Iterable[str], kind: str = "charfn", source: str = "<input>"
) -> GridFunction:
    """Read a grid function from CSV lines with the columns t, re, im.
    Rows are sorted by t; a header line and blank lines are skipped."""
    points: List[float] = []
    values: List[complex] = []
    for lineno, row in enumerate(csv.reader(lines), start=1):
        if not row or all(not c.strip() for c in row):
            continue
        cells = [c.strip() for c in row]
        if lineno == 1 and cells[0].lower() == "t":
            continue
        if len(cells) not in (2, 3):
            raise InputError(
                "{0}, line {1}: expected the columns t, re, im".format(source, lineno)
            )
        t = _parse_float(cells[0], "t", lineno, source)
        re_ = _parse_float(cells[1], "re", lineno, source)
        im = _parse_float(cells[2], "im", lineno, source) if len(cells) == 3 else 0.0
        points.append(t)
        values.append(complex(re_, im))
    if not points:
        raise InputError("{0}: the grid function has no rows".format(source))
    order = np.argsort(points, kind="stable")
    pts = np.asarray(points)[order]
    if np.any(np.diff(pts) == 0.0):
        raise InputError("{0}: duplicate t values in the grid function".format(source))
    try:
        return GridFunction(pts, np.asarray(values)[order], kind)
    except ParameterError as e:
        raise InputError("{0}: {1}".format(source, e.description))


def load_grid_function(path: str, kind: str = "charfn") -> GridFunction:
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return read_grid_function(f, kind, path)
    except OSError as e:
        raise InputError("Unable to read {0}: {1}".format(path, e))


def parse_grid(spec: str) -> np.ndarray:
    """Parse 'lo:hi:step' into the equidistant grid lo, lo + step, ..., hi"""
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError("A grid is given as lo:hi:step, not '{0}'".format(spec))
    try:
        lo, hi, step = (float(x) for x in parts)
    except ValueError:
        raise InputError("A grid is given as lo:hi:step, not '{0}'".format(spec))
    if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
        raise InputError("Grid bounds and step must be finite")
    if step <= 0.0 or hi < lo:
        raise InputError("A grid needs lo <= hi and a positive step")
    span = (hi - lo) / step
    n = int(round(span))
    if abs(span - n) > 1e-9 * max(1.0, span):
        raise InputError("The grid step must divide hi - lo")
    pts = lo + step * np.arange(n + 1)
    # Snap values that are zero up to rounding
    pts[np.abs(pts) < 1e-12 * max(1.0, abs(lo), abs(hi))] = 0.0
    return pts


# CSV tables


def write_table(f: TextIO, table: Table) -> None:
    header, rows = table
    w = csv.writer(f, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def table_text(table: Table) -> str:
    buf = io.StringIO()
    write_table(buf, table)
    return buf.getvalue()


def grid_table(points: Sequence[float], values: Sequence[complex]) -> Table:
    rows = [[fmt(t), fmt(z.real), fmt(z.imag)] for t, z in zip(points, np.asarray(values))]
    return list(GRID_HEADER), rows


def grid_function_table(F: GridFunction) -> Table:
    return grid_table(F.points, F.values)


def kernel_table(km: KernelMatrix) -> Table:
    rows = [
        [fmt(s), fmt(t), fmt(km.K[j, k].real), fmt(km.K[j, k].imag)]
        for j, s in enumerate(km.grid)
        for k, t in enumerate(km.grid)
    ]
    return ["s", "t", "re", "im"], rows


def realization_table(real: CocycleRealization) -> Table:
    """One row per (grid point, component) of the realized vectors"""
    rows = [
        [fmt(t), str(i), fmt(real.vectors[j, i].real), fmt(real.vectors[j, i].imag)]
        for j, t in enumerate(real.grid)
        for i in range(real.rank)
    ]
    return ["t", "component", "re", "im"], rows


def path_table(path: SamplePath) -> Table:
    return ["t", "value"], [[fmt(t), fmt(x)] for t, x in zip(path.times, path.values)]


def ecf_table(report: EcfReport, target: Optional[Sequence[complex]] = None) -> Table:
    header = ["t", "re", "im", "ci"]
    if target is not None:
        header += ["target_re", "target_im"]
    rows: List[Row] = []
    for j, t in enumerate(report.tgrid):
        z = report.values[j]
        row = [fmt(t), fmt(z.real), fmt(z.imag), fmt(report.radius[j])]
        if target is not None:
            row += [fmt(target[j].real), fmt(target[j].imag)]
        rows.append(row)
    return header, rows


# JSON forms


def complex_matrix(m: np.ndarray) -> List[List[List[Optional[float]]]]:
    return [[complex_pair(z) for z in row] for row in np.asarray(m, dtype=complex)]


def grid_function_to_dict(F: GridFunction) -> Dict[str, Any]:
    return {
        "kind": F.kind,
        "t": jsonable(F.points),
        "values": [complex_pair(z) for z in F.values],
    }


def kernel_to_dict(km: KernelMatrix) -> Dict[str, Any]:
    return {"grid": jsonable(km.grid), "size": km.size, "K": complex_matrix(km.K)}


def realization_to_dict(real: CocycleRealization) -> Dict[str, Any]:
    return {
        "grid": jsonable(real.grid),
        "rank": real.rank,
        "eigen_floor": real.eigen_floor,
        "gram_error": real.gram_error,
        "eigenvalues": jsonable(real.eigenvalues),
        "vectors": complex_matrix(real.vectors),
    }


def coherent_vector_to_dict(vec: CoherentVector) -> Dict[str, Any]:
    """A coherent vector with its graded basis: entry k of the coefficients
    belongs to the multiset basis[k] of one-particle indices"""
    return {
        "psi": [complex_pair(z) for z in vec.psi],
        "degree": vec.degree,
        "basis": [list(m) for m in vec.fock.basis()],
        "coefficients": [complex_pair(z) for z in vec.coefficients],
    }


def coherent_span_to_dict(span: CoherentSpan) -> Dict[str, Any]:
    d = span.to_dict()
    d["grid"] = jsonable(span.grid)
    d["gram"] = complex_matrix(span.gram)
    d["exact"] = complex_matrix(span.exact)
    return d


def path_to_dict(path: SamplePath) -> Dict[str, Any]:
    return {
        "seed": path.seed,
        "delta": path.delta,
        "t": jsonable(path.times),
        "values": jsonable(path.values),
    }


def ecf_to_dict(report: EcfReport, target: Optional[Sequence[complex]] = None) -> Dict[str, Any]:
    d: Dict[str, Any] = {
        "n": report.n,
        "t": jsonable(report.tgrid),
        "values": [complex_pair(z) for z in report.values],
        "ci": jsonable(report.radius),
    }
    if target is not None:
        d["target"] = [complex_pair(complex(z)) for z in target]
    return d
