"""JSON matrix files: ``{"dim": n, "re": [...], "im": [...]}``, row-major.

Python's ``repr`` of a float is the shortest string that parses back to the
same double, so writing and reading round-trips bit-exactly.
"""
from __future__ import annotations

import json

import numpy as np

from .linalg import as_matrix

__all__ = ["matrix_to_dict", "matrix_from_dict", "write_matrix", "read_matrix"]


def matrix_to_dict(A):
    A = as_matrix(A)
    n = A.shape[0]
    return {"dim": n,
            "re": [float(v) for v in A.real.ravel()],
            "im": [float(v) for v in A.imag.ravel()]}


def matrix_from_dict(obj):
    try:
        n = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if n < 1 or re.shape != (n * n,) or im.shape != (n * n,):
        raise ValueError(f"matrix object needs dim >= 1 and {n}*{n} entries in re and im")
    A = np.empty(n * n, dtype=complex)
    A.real = re
    A.imag = im
    return as_matrix(A.reshape(n, n))


def write_matrix(path, A):
    with open(path, "w") as fh:
        json.dump(matrix_to_dict(A), fh, allow_nan=False)
        fh.write("\n")


def read_matrix(path):
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))
