"""Exact rank over F_p."""

from __future__ import annotations

import numpy as np


def rank_mod_p(A, p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination (p < 2^31)."""
    M = np.array(A, dtype=np.int64) % p
    if M.size == 0:
        return 0
    rows, cols = M.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(M[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, col]), p - 2, p)
        M[rank] = M[rank] * inv % p
        below = np.nonzero(M[rank + 1:, col])[0] + rank + 1
        if below.size:
            factors = M[below, col][:, None]
            M[below] = (M[below] - factors * M[rank]) % p
        rank += 1
    return rank
