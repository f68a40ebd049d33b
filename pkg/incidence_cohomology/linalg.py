"""Exact rank over the prime field F_p by dense Gaussian elimination."""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError
from .padic import is_prime

__all__ = ["rank_mod_p", "nullity_mod_p"]


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """
    Rank of an integer matrix reduced mod ``p``.

    Parameters
    ----------
    matrix : np.ndarray
        Two-dimensional integer array; it is copied, never modified.
    p : int
        Prime.

    Returns
    -------
    int
        The rank over F_p.
    """
    if not is_prime(p):
        raise InvalidArgumentError(f"p={p} must be prime")
    A = np.array(matrix, dtype=np.int64, copy=True) % p
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]), -1, p)
        A[r, :] = (A[r, :] * inv) % p
        below = A[r + 1 :, c].copy()
        rows = np.flatnonzero(below)
        if rows.size:
            A[r + 1 + rows, :] = (A[r + 1 + rows, :] - np.outer(below[rows], A[r, :])) % p
        r += 1
    return r


def nullity_mod_p(matrix: np.ndarray, p: int) -> int:
    """Dimension of the kernel of ``matrix`` acting on column vectors over F_p."""
    return np.asarray(matrix).shape[1] - rank_mod_p(matrix, p)
