"""Exact linear algebra over F_p on integer numpy arrays.

Matrices are 2-D int64 arrays of canonical residues; every function takes the
prime modulus explicitly and never mutates its inputs.
"""

from __future__ import annotations

import numpy as np


def as_matrix(data, p: int) -> np.ndarray:
    m = np.atleast_2d(np.asarray(data, dtype=np.int64)) % p
    return m


def matmul(a, b, p: int) -> np.ndarray:
    """(a @ b) mod p; inputs small enough that int64 products cannot overflow."""
    return (as_matrix(a, p) @ as_matrix(b, p)) % p


def rref(m, p: int) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Unique reduced row echelon form, rank, and pivot columns."""
    a = as_matrix(m, p).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for other in range(rows):
            if other != r and a[other, c]:
                a[other] = (a[other] - a[other, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, r, tuple(pivots)


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def row_space_contains(m, v, p: int) -> bool:
    """True iff v is a linear combination of the rows of m."""
    a = as_matrix(m, p)
    vec = np.asarray(v, dtype=np.int64) % p
    if vec.ndim != 1 or vec.shape[0] != a.shape[1]:
        raise ValueError(f"vector length {vec.shape} does not match {a.shape[1]} columns")
    reduced, _, pivots = rref(a, p)
    w = vec.copy()
    for r, c in enumerate(pivots):
        if w[c]:
            w = (w - w[c] * reduced[r]) % p
    return not w.any()


def null_space(m, p: int) -> np.ndarray:
    """Row basis of the right kernel {v : m @ v == 0}; cols - rank rows."""
    a = as_matrix(m, p)
    rows, cols = a.shape
    reduced, rk, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[idx, fc] = 1
        for r, pc in enumerate(pivots):
            basis[idx, pc] = (-reduced[r, fc]) % p
    return basis


def row_space_equal(a, b, p: int) -> bool:
    """Compare row spaces via their canonical reduced echelon forms."""
    ra, rka, _ = rref(a, p)
    rb, rkb, _ = rref(b, p)
    if rka != rkb or ra.shape[1] != rb.shape[1]:
        return False
    return np.array_equal(ra[:rka], rb[:rkb])
