"""Compiled inner loops for Z/mZ coefficient arithmetic (int64, m < 2**31)."""

from __future__ import annotations

import numpy as np
from numba import njit


# Inputs are canonical residues. When (#terms + 1) * m^2 fits in int64 the
# sums are reduced once at the end instead of after every product.
_LAZY_LIMIT = 2**62


@njit(cache=True, nogil=True)
def _sparse_mul(idx, val, dense, m, lazy):
    n = dense.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for t in range(idx.shape[0]):
        i = idx[t]
        c = val[t]
        if lazy:
            for j in range(n - i):
                out[i + j] += c * dense[j]
        else:
            for j in range(n - i):
                out[i + j] = (out[i + j] + c * dense[j]) % m
    for j in range(n):
        out[j] %= m
    return out


@njit(cache=True, nogil=True)
def _sparse_solve(num, idx, val, c0inv, m, lazy):
    n = num.shape[0]
    d = np.zeros(n, dtype=np.int64)
    for k in range(n):
        s = num[k]
        for t in range(idx.shape[0]):
            i = idx[t]
            if i > k:
                break
            if lazy:
                s -= val[t] * d[k - i]
            else:
                s = (s - val[t] * d[k - i]) % m
        d[k] = ((s % m) * c0inv) % m
    return d


def _lazy(nterms: int, m: int) -> bool:
    return (nterms + 1) * m * m < _LAZY_LIMIT


def _split(terms):
    idx = np.fromiter((i for i, _ in terms), dtype=np.int64, count=len(terms))
    val = np.fromiter((c for _, c in terms), dtype=np.int64, count=len(terms))
    return idx, val


def sparse_mul_mod(terms, dense, m: int) -> list[int]:
    """Product of ``sum c q^i`` (over ``terms``) with ``dense``, truncated to len(dense)."""
    idx, val = _split(terms)
    dense = np.asarray(dense, dtype=np.int64)
    return _sparse_mul(idx, val, dense, m, _lazy(len(terms), m)).tolist()


def sparse_solve_mod(num, taps, c0inv: int, m: int) -> list[int]:
    """Solve ``den * d = num`` where ``den = c0 + sum_{taps} c q^i`` and ``c0inv = c0^-1``."""
    idx, val = _split(taps)
    num = np.asarray(num, dtype=np.int64)
    return _sparse_solve(num, idx, val, c0inv % m, m, _lazy(len(taps), m)).tolist()
