"""Exact integer matrices on numpy object arrays.

Entries are Python ints, so products and Kronecker factors never wrap.
Every operation that produces new entries checks them against the signed
64-bit range and raises OverflowError beyond it; callers treat that as a
hard error rather than continuing with silently huge multiplicities.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = [
    "INT64_MAX",
    "INT64_MIN",
    "asmatrix",
    "asvector",
    "identity",
    "kron",
    "matmul",
    "matvec",
    "permutation",
    "to_lists",
]

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _check_range(arr: np.ndarray) -> np.ndarray:
    for v in arr.flat:
        if v > INT64_MAX or v < INT64_MIN:
            raise OverflowError(f"integer entry {v} exceeds the 64-bit range")
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    _check_range(arr)
    arr.setflags(write=False)
    return arr


def _as_int(v, what: str) -> int:
    if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
        raise ValueError(f"{what} must be an integer, got {v!r}")
    return int(v)


def asmatrix(data, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Copy `data` into a read-only 2d object array of Python ints.

    `shape` pins the expected (rows, cols); needed to disambiguate empty
    matrices, whose nesting carries no column information.
    """
    rows = [[_as_int(v, "matrix entry") for v in row] for row in data]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows > 0 else (0 if shape is None else shape[1])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix rows have unequal lengths")
    if shape is not None and (nrows, ncols) != shape:
        raise ValueError(f"matrix shape {(nrows, ncols)} != expected {shape}")
    out = np.empty((nrows, ncols), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            out[i, j] = v
    return _freeze(out)


def asvector(data) -> np.ndarray:
    vals = [_as_int(v, "vector entry") for v in data]
    out = np.empty((len(vals),), dtype=object)
    for i, v in enumerate(vals):
        out[i] = v
    return _freeze(out)


def identity(n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = 1 if i == j else 0
    return _freeze(out)


def permutation(perm: Sequence[int]) -> np.ndarray:
    """Permutation matrix P with P[perm[i], i] = 1."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{tuple(perm)} is not a permutation of 0..{n - 1}")
    out = np.empty((n, n), dtype=object)
    out[...] = 0
    for i, p in enumerate(perm):
        out[p, i] = 1
    return _freeze(out)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        out = np.empty((a.shape[0], b.shape[1]), dtype=object)
        out[...] = 0
    else:
        out = np.asarray(np.dot(a, b), dtype=object).reshape(a.shape[0], b.shape[1])
    return _freeze(out)


def matvec(m: np.ndarray, v: Sequence[int]) -> tuple[int, ...]:
    if m.shape[1] != len(v):
        raise ValueError(f"cannot apply {m.shape} to a vector of length {len(v)}")
    out = tuple(sum((int(m[i, j]) * int(v[j]) for j in range(m.shape[1])), 0) for i in range(m.shape[0]))
    for val in out:
        if val > INT64_MAX or val < INT64_MIN:
            raise OverflowError(f"integer entry {val} exceeds the 64-bit range")
    return out


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, row-major on both sides (left factor most significant)."""
    ra, ca = a.shape
    rb, cb = b.shape
    out = np.empty((ra * rb, ca * cb), dtype=object)
    for i in range(ra):
        for j in range(ca):
            aij = a[i, j]
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = aij * b[k, l]
    return _freeze(out)


def to_lists(m: np.ndarray) -> list[list[int]]:
    return [[int(v) for v in row] for row in m]
