"""Row-major reshaping, column-major vectorization and reshuffling.

Canonical bases of ``M_m`` are enumerated in row-major order: ``eps_k`` is
the matrix unit whose ``res`` is the k-th standard basis vector.  All
reshuffles below are fixed permutations of matrix entries derived from that
enumeration.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ContractViolation
from .linalg import as_matrix


class DimPair(NamedTuple):
    m: int
    n: int


def dim_pair(dims) -> DimPair:
    try:
        m, n = (int(d) for d in dims)
    except (TypeError, ValueError) as exc:
        raise ContractViolation(f"dims must be a pair of integers, got {dims!r}") from exc
    if m < 1 or n < 1:
        raise ContractViolation(f"dims must be positive, got ({m}, {n})")
    return DimPair(m, n)


def res(a) -> np.ndarray:
    """Stack the rows of `a` into a column vector."""
    a = as_matrix(a)
    return a.reshape(-1, 1).copy()


def vec(a) -> np.ndarray:
    """Stack the columns of `a` into a column vector."""
    a = as_matrix(a)
    return a.T.reshape(-1, 1).copy()


def _as_column(v, length: int) -> np.ndarray:
    v = as_matrix(v, name="vector")
    if v.shape[1] != 1 and v.shape[0] == 1:
        v = v.T
    if v.shape != (length, 1):
        raise ContractViolation(f"expected a column vector of length {length}, got shape {v.shape}")
    return v


def unres(v, dims) -> np.ndarray:
    """Inverse of :func:`res`: refill an ``m x n`` matrix row by row."""
    m, n = dim_pair(dims)
    return _as_column(v, m * n).reshape(m, n).copy()


def unvec(v, dims) -> np.ndarray:
    """Inverse of :func:`vec`: refill an ``m x n`` matrix column by column."""
    m, n = dim_pair(dims)
    return _as_column(v, m * n).reshape(n, m).T.copy()


def _check_split(a: np.ndarray, dims: DimPair) -> None:
    side = dims.m * dims.n
    if a.shape != (side, side):
        raise ContractViolation(
            f"reshuffle with split {tuple(dims)} needs a {side}x{side} matrix, got {a.shape}"
        )


def _reshuffle_general(a: np.ndarray, rows: DimPair, cols: DimPair) -> np.ndarray:
    # a[(i, k), (j, l)] -> out[(i, j), (k, l)] for rows split (m1, n1), cols split (m2, n2)
    m1, n1 = rows
    m2, n2 = cols
    return a.reshape(m1, n1, m2, n2).transpose(0, 2, 1, 3).reshape(m1 * m2, n1 * n2)


def reshuffle(a, dims) -> np.ndarray:
    """Reshuffle a square ``mn x mn`` matrix into an ``m^2 x n^2`` matrix.

    Entry ``(i, j)`` of the result is ``tr[(eps_i (x) eps'_j)^dagger a]``
    where ``eps_i`` runs over matrix units of ``M_m`` and ``eps'_j`` over
    those of ``M_n``, both in row-major order.
    """
    a = as_matrix(a)
    dims = dim_pair(dims)
    _check_split(a, dims)
    return _reshuffle_general(a, dims, dims).copy()


def reshuffle_alt(a, dims) -> np.ndarray:
    """Column-order reshuffle: entry ``(i, j)`` is ``tr[(eps_j (x) eps'_i) a]``.

    The result is ``n^2 x m^2``; for ``m == n`` it equals
    ``(S @ reshuffle(a) @ S).T`` with ``S`` the swap.
    """
    a = as_matrix(a)
    dims = dim_pair(dims)
    _check_split(a, dims)
    m, n = dims
    # a[(b, d), (a_, c)] -> out[(c, d), (a_, b)]
    return a.reshape(m, n, m, n).transpose(3, 1, 2, 0).reshape(n * n, m * m).copy()


def _permutation_from_map(index_map: np.ndarray) -> np.ndarray:
    # index_map[k] = source position of output entry k
    size = index_map.size
    p = np.zeros((size, size), dtype=np.complex128)
    p[np.arange(size), index_map] = 1.0
    return p


def reshuffle_permutation(dims_out, dims_in) -> np.ndarray:
    """Permutation ``M_R`` with ``res(reshuffle(A)) == M_R @ res(A)``.

    `A` has its rows split as ``dims_out`` and its columns as ``dims_in``
    (``(m1 n1) x (m2 n2)``); for a square split pass the same pair twice.
    """
    rows = dim_pair(dims_out)
    cols = dim_pair(dims_in)
    shape = (rows.m * rows.n, cols.m * cols.n)
    positions = np.arange(shape[0] * shape[1]).reshape(shape)
    return _permutation_from_map(_reshuffle_general(positions, rows, cols).reshape(-1))


def transpose_permutation(dims) -> np.ndarray:
    """``P(m, n)`` with ``res(A.T) == P @ res(A)`` for every ``m x n`` matrix `A`."""
    m, n = dim_pair(dims)
    positions = np.arange(m * n).reshape(m, n)
    return _permutation_from_map(positions.T.reshape(-1))


def swap_matrix(d: int) -> np.ndarray:
    """Swap of two ``k``-dimensional tensor factors, ``d = k**2``."""
    k = int(round(np.sqrt(d)))
    if d < 1 or k * k != d:
        raise ContractViolation(f"swap_matrix needs a perfect square dimension, got {d}")
    return transpose_permutation((k, k))
