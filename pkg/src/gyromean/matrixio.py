"""JSON matrix file format.

Schema: ``{"dim": n, "complex": true, "rows": [[[re, im], ...], ...]}``,
row-major.  Real matrices may set ``"complex": false`` and store plain
numbers instead of [re, im] pairs.
"""

from __future__ import annotations

import json

import numpy as np


class MatrixFormatError(ValueError):
    """Malformed matrix file."""


def matrix_to_payload(M) -> dict:
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got shape {A.shape}")
    if np.all(A.imag == 0.0):
        rows = [[float(x.real) for x in row] for row in A]
        return {"dim": A.shape[0], "complex": False, "rows": rows}
    rows = [[[float(x.real), float(x.imag)] for x in row] for row in A]
    return {"dim": A.shape[0], "complex": True, "rows": rows}


def payload_to_matrix(payload: dict) -> np.ndarray:
    try:
        dim = int(payload["dim"])
        is_complex = bool(payload["complex"])
        rows = payload["rows"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"malformed matrix payload: {exc}") from exc
    if dim < 1 or len(rows) != dim or any(len(r) != dim for r in rows):
        raise MatrixFormatError(f"rows do not form a {dim}x{dim} matrix")
    M = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if is_complex:
                if not isinstance(cell, (list, tuple)) or len(cell) != 2:
                    raise MatrixFormatError(
                        f"entry ({i},{j}) must be an [re, im] pair")
                M[i, j] = complex(float(cell[0]), float(cell[1]))
            else:
                if isinstance(cell, (list, tuple)):
                    raise MatrixFormatError(
                        f"entry ({i},{j}) must be a plain number")
                M[i, j] = complex(float(cell), 0.0)
    return M


def save_matrix(path, M) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_payload(M), fh, indent=2)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"{path}: not valid JSON ({exc})") from exc
    return payload_to_matrix(payload)
