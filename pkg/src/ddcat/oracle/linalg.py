"""Dense linear algebra over a prime field, on numpy int64 arrays.

Entries stay below p < 2^17, so a product of two entries fits easily in
int64 and every row operation can be done vectorised.
"""

from __future__ import annotations

import os

import numpy as np

DEFAULT_PRIME = 32003
SECOND_PRIME = 65537


def working_prime() -> int:
    return SECOND_PRIME if os.environ.get("DDCAT_SECOND_PRIME") == "1" else DEFAULT_PRIME


def _inv(a: int, p: int) -> int:
    return pow(int(a), p - 2, p)


def row_reduce(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    M = np.array(A, dtype=np.int64) % p
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        M[r] = (M[r] * _inv(M[r, c], p)) % p
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : A v = 0} as the rows of the returned matrix."""
    rows, cols = A.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = row_reduce(A, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(piv):
            basis[k, c] = (-R[r, f]) % p
    return basis


def is_invertible(A: np.ndarray, p: int) -> bool:
    return A.shape[0] == A.shape[1] and rank(A, p) == A.shape[0]
