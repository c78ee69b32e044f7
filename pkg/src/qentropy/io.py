"""JSON file formats.

matrix:   {"dim": n, "data": [[re, im], ...]}   (n*n entries, row-major)
ensemble: {"weights": [...], "vectors": [[[re, im], ...], ...]}
chain:    {"site_dim": q, "length": L, "site_term": <matrix>, "coupling_term": <matrix>}
"""

import json
from pathlib import Path

import numpy as np

from .capacity import Ensemble
from .errors import FormatError
from .maxent import ChainSpec


def _complex(entry) -> complex:
    if not isinstance(entry, (list, tuple)) or len(entry) != 2:
        raise FormatError(f"entry {entry!r} is not a [re, im] pair")
    try:
        return complex(float(entry[0]), float(entry[1]))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"entry {entry!r} is not numeric") from exc


def _pairs(values) -> list:
    return [[float(np.real(z)), float(np.imag(z))] for z in values]


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict) or "dim" not in obj or "data" not in obj:
        raise FormatError('matrix object needs "dim" and "data"')
    n = obj["dim"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"dim must be a positive integer, got {n!r}")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != n * n:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise FormatError(f"data must hold dim^2 = {n * n} entries, got {got}")
    return np.array([_complex(x) for x in data], dtype=complex).reshape(n, n)


def matrix_to_json(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"dim": int(m.shape[0]), "data": _pairs(m.reshape(-1))}


def ensemble_from_json(obj) -> Ensemble:
    if not isinstance(obj, dict) or "weights" not in obj or "vectors" not in obj:
        raise FormatError('ensemble object needs "weights" and "vectors"')
    vectors = obj["vectors"]
    if not isinstance(vectors, list) or not vectors:
        raise FormatError("vectors must be a non-empty list")
    states = [[_complex(x) for x in v] for v in vectors]
    if len({len(v) for v in states}) != 1:
        raise FormatError("vectors differ in length")
    return Ensemble(np.asarray(obj["weights"], dtype=float), np.array(states))


def ensemble_to_json(ens: Ensemble) -> dict:
    return {"weights": [float(w) for w in ens.weights], "vectors": [_pairs(v) for v in ens.states]}


def chain_from_json(obj) -> ChainSpec:
    keys = ("site_dim", "length", "site_term", "coupling_term")
    if not isinstance(obj, dict) or any(k not in obj for k in keys):
        raise FormatError(f"chain object needs keys {keys}")
    return ChainSpec(int(obj["site_dim"]), int(obj["length"]),
                     matrix_from_json(obj["site_term"]), matrix_from_json(obj["coupling_term"]))


def chain_to_json(spec: ChainSpec) -> dict:
    return {"site_dim": spec.site_dim, "length": spec.length,
            "site_term": matrix_to_json(spec.site_term),
            "coupling_term": matrix_to_json(spec.coupling_term)}


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def read_matrix(path) -> np.ndarray:
    return matrix_from_json(load_json(path))


def write_matrix(path, m) -> None:
    Path(path).write_text(json.dumps(matrix_to_json(m)))
