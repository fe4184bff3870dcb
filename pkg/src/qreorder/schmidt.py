"""Schmidt decomposition of bipartite vectors and operators via the SVD."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation
from .linalg import RANK_RTOL, as_matrix, max_abs, svd
from .reorderings import dim_pair, reshuffle, unres

DEFAULT_TOL = 1e-10


class SchmidtKind(str, enum.Enum):
    VECTOR = "vector"
    OPERATOR = "operator"


@dataclass(frozen=True)
class SchmidtResult:
    """Terms ``coefficients[i] * kron(left_factors[i], right_factors[i])``.

    Factors are column vectors for :attr:`SchmidtKind.VECTOR` and square
    matrices for :attr:`SchmidtKind.OPERATOR`.  Coefficients are strictly
    positive and sorted non-increasing.
    """

    coefficients: np.ndarray
    left_factors: tuple[np.ndarray, ...]
    right_factors: tuple[np.ndarray, ...]
    kind: SchmidtKind

    def __len__(self) -> int:
        return len(self.coefficients)

    def reconstruct(self) -> np.ndarray:
        if not len(self):
            raise ValueError("empty decomposition has no shape to reconstruct")
        return sum(
            c * np.kron(x, y)
            for c, x, y in zip(self.coefficients, self.left_factors, self.right_factors)
        )

    def number(self, tol: float = DEFAULT_TOL) -> int:
        """Count coefficients above ``tol`` times the largest one."""
        if not len(self):
            return 0
        return int(np.count_nonzero(self.coefficients > tol * self.coefficients[0]))


def _truncated(sigma: np.ndarray) -> int:
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > RANK_RTOL * sigma[0]))


def schmidt_vector(psi, dims) -> SchmidtResult:
    """Schmidt decomposition of a vector in ``C^m (x) C^n``.

    The coefficient matrix ``C = unres(psi)`` is factored as ``U S V^dagger``;
    left factors are the columns of ``U`` and right factors the columns of
    ``conj(V)``.  Normalization of `psi` is not required.
    """
    m, n = dims = dim_pair(dims)
    psi = as_matrix(psi, name="psi")
    if psi.shape[0] == 1:
        psi = psi.T
    if psi.shape != (m * n, 1):
        raise ContractViolation(
            f"schmidt_vector needs a column vector of length {m * n}, got shape {psi.shape}"
        )
    if max_abs(psi) == 0.0:
        raise ContractViolation("cannot decompose the zero vector")
    r = svd(unres(psi, dims))
    k = _truncated(r.sigma)
    vbar = r.v.conj()
    return SchmidtResult(
        coefficients=r.sigma[:k].copy(),
        left_factors=tuple(r.u[:, [i]] for i in range(k)),
        right_factors=tuple(vbar[:, [i]] for i in range(k)),
        kind=SchmidtKind.VECTOR,
    )


def schmidt_operator(a, dims) -> SchmidtResult:
    """Operator Schmidt decomposition of an ``mn x mn`` matrix.

    Works for any square matrix, positive or not.  The coefficients are the
    singular values of the reshuffled matrix ``a^R``; factors are its
    un-reshaped singular vectors and are orthonormal under ``tr(X^dagger Y)``.
    """
    m, n = dims = dim_pair(dims)
    a = as_matrix(a)
    if a.shape != (m * n, m * n):
        raise ContractViolation(
            f"schmidt_operator with split {tuple(dims)} needs a {m * n}x{m * n} matrix, got {a.shape}"
        )
    r = svd(reshuffle(a, dims))
    k = _truncated(r.sigma)
    vbar = r.v.conj()
    return SchmidtResult(
        coefficients=r.sigma[:k].copy(),
        left_factors=tuple(unres(r.u[:, i], (m, m)) for i in range(k)),
        right_factors=tuple(unres(vbar[:, i], (n, n)) for i in range(k)),
        kind=SchmidtKind.OPERATOR,
    )


def schmidt_number(psi, dims, tol: float = DEFAULT_TOL) -> int:
    if tol < 0:
        raise ContractViolation(f"tol must be non-negative, got {tol}")
    return schmidt_vector(psi, dims).number(tol)


def is_separable_pure(psi, dims, tol: float = DEFAULT_TOL) -> bool:
    """A pure state is a product state iff its Schmidt number is one."""
    return schmidt_number(psi, dims, tol) == 1
