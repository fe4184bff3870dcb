"""Dense complex matrix helpers and Jacobi-type spectral factorizations.

Every matrix in the package is a 2-D ``complex128`` :class:`numpy.ndarray`;
column vectors have shape ``(k, 1)``.  :func:`as_matrix` is the single entry
point that normalizes user input into that form.

The SVD is a one-sided (Hestenes) Jacobi iteration and the Hermitian
eigensolver is a cyclic two-sided Jacobi iteration.  Both are aimed at the
small dense matrices met here (superoperators up to 64 x 64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractViolation, NumericalFailure

MAX_SWEEPS = 100
EIG_OFF_TOL = 1e-14
RANK_RTOL = 1e-12
HERMITIAN_RTOL = 1e-10

_EPS = np.finfo(float).eps


def as_matrix(a, *, name: str = "matrix") -> np.ndarray:
    """Return `a` as a finite 2-D complex array (1-D input becomes a column)."""
    arr = np.asarray(a)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.size == 0:
        raise ContractViolation(f"{name} must be a non-empty 2-D array, got shape {arr.shape}")
    try:
        arr = arr.astype(np.complex128, copy=False)
    except (TypeError, ValueError) as exc:
        raise ContractViolation(f"{name} has non-numeric entries") from exc
    if not np.all(np.isfinite(arr)):
        raise ContractViolation(f"{name} has NaN or infinite entries")
    return arr


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a, name="a")
    b = as_matrix(b, name="b")
    if a.shape[1] != b.shape[0]:
        raise ContractViolation(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a, name="a"), as_matrix(b, name="b"))


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt product ``tr(a^dagger b)``, conjugate-linear in `a`."""
    a = as_matrix(a, name="a")
    b = as_matrix(b, name="b")
    if a.shape != b.shape:
        raise ContractViolation(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def is_hermitian(a, rtol: float = HERMITIAN_RTOL) -> bool:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    return max_abs(a - a.conj().T) <= rtol * max(1.0, max_abs(a))


@dataclass(frozen=True)
class SvdResult:
    """``a = u @ diag(sigma) @ v^dagger`` with `u`, `v` square unitaries."""

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def rank(self, rtol: float = RANK_RTOL) -> int:
        if self.sigma.size == 0 or self.sigma[0] == 0.0:
            return 0
        return int(np.count_nonzero(self.sigma > rtol * self.sigma[0]))

    def sigma_matrix(self) -> np.ndarray:
        m, n = self.u.shape[0], self.v.shape[0]
        s = np.zeros((m, n), dtype=np.complex128)
        k = self.sigma.size
        s[np.arange(k), np.arange(k)] = self.sigma
        return s

    def reconstruct(self) -> np.ndarray:
        return self.u @ self.sigma_matrix() @ self.v.conj().T


@dataclass(frozen=True)
class EigResult:
    """Eigenvalues sorted non-increasing; eigenvectors are the columns of `vectors`."""

    values: np.ndarray
    vectors: np.ndarray


def _complete_orthonormal(q: np.ndarray, size: int) -> np.ndarray:
    """Extend the orthonormal columns of `q` to a `size` x `size` unitary."""
    cols = [q[:, j] for j in range(q.shape[1])]
    for i in range(size):
        if len(cols) == size:
            break
        r = np.zeros(size, dtype=np.complex128)
        r[i] = 1.0
        for _ in range(2):
            for c in cols:
                r = r - c * np.vdot(c, r)
        nrm = np.linalg.norm(r)
        if nrm > 1e-6:
            cols.append(r / nrm)
    return np.column_stack(cols) if cols else np.zeros((size, 0), dtype=np.complex128)


def _pair_rotation(alpha: float, beta: float, g: float) -> tuple[float, float]:
    # Real Jacobi rotation zeroing the off-diagonal of [[alpha, g], [g, beta]].
    zeta = (beta - alpha) / (2.0 * g)
    t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(1.0 + zeta * zeta))
    c = 1.0 / math.sqrt(1.0 + t * t)
    return c, c * t


def _svd_tall(a: np.ndarray) -> SvdResult:
    m, n = a.shape
    w = a.copy()
    v = np.eye(n, dtype=np.complex128)
    fro = float(np.linalg.norm(a))
    tol = max(m, 2) * _EPS
    floor = (_EPS * fro) ** 2

    for sweep in range(MAX_SWEEPS + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                wp, wq = w[:, p], w[:, q]
                alpha = float(np.vdot(wp, wp).real)
                beta = float(np.vdot(wq, wq).real)
                gamma = complex(np.vdot(wp, wq))
                g = abs(gamma)
                if g <= floor or g <= tol * math.sqrt(alpha * beta):
                    continue
                rotated = True
                d = (gamma / g).conjugate()
                c, s = _pair_rotation(alpha, beta, g)
                wq_ph = d * wq
                w[:, p], w[:, q] = c * wp - s * wq_ph, s * wp + c * wq_ph
                vp, vq_ph = v[:, p].copy(), d * v[:, q]
                v[:, p], v[:, q] = c * vp - s * vq_ph, s * vp + c * vq_ph
        if not rotated:
            break
        if sweep == MAX_SWEEPS:
            raise NumericalFailure("one-sided Jacobi SVD did not converge", sweep)

    sigma = np.linalg.norm(w, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    w = w[:, order]
    v = v[:, order]

    keep = sigma > _EPS * fro
    u_cols = w[:, keep] / sigma[keep]
    u = _complete_orthonormal(u_cols, m)
    # zero-sigma columns were replaced by completion vectors in order; they
    # all trail the kept ones because sigma is sorted
    return SvdResult(u=u, sigma=sigma, v=v)


def svd(a) -> SvdResult:
    """Full singular value decomposition by one-sided Jacobi rotations.

    Returns unitary ``u`` (m x m), ``v`` (n x n) and the ``min(m, n)``
    singular values in non-increasing order.  Rank-deficient input yields
    trailing (numerically) zero singular values; use :meth:`SvdResult.rank`
    for the ``1e-12`` relative cutoff.
    """
    a = as_matrix(a)
    m, n = a.shape
    if m < n:
        r = _svd_tall(a.conj().T)
        return SvdResult(u=r.v, sigma=r.sigma, v=r.u)
    return _svd_tall(a)


def eig_hermitian(a) -> EigResult:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Raises :class:`ContractViolation` if `a` is not square or deviates from
    its adjoint by more than ``1e-10 * max(1, max|a|)``.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ContractViolation(f"eig_hermitian needs a square matrix, got {a.shape}")
    if not is_hermitian(a):
        raise ContractViolation("eig_hermitian needs a Hermitian matrix")

    h = (a + a.conj().T) / 2
    v = np.eye(n, dtype=np.complex128)
    fro = float(np.linalg.norm(h))
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(MAX_SWEEPS + 1):
        off = float(np.linalg.norm(h[off_mask]))
        if off <= EIG_OFF_TOL * fro:
            break
        if sweep == MAX_SWEEPS:
            raise NumericalFailure("Hermitian Jacobi eigensolver did not converge", sweep)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(h[p, q])
                g = abs(apq)
                if g == 0.0:
                    continue
                phase = apq / g
                d = phase.conjugate()
                c, s = _pair_rotation(h[p, p].real, h[q, q].real, g)
                # h <- J^dagger h J with J = diag(1, d) @ [[c, s], [-s, c]]
                hp, hq = h[:, p].copy(), d * h[:, q]
                h[:, p], h[:, q] = c * hp - s * hq, s * hp + c * hq
                rp, rq = h[p, :].copy(), phase * h[q, :]
                h[p, :], h[q, :] = c * rp - s * rq, s * rp + c * rq
                h[p, q] = h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real
                vp, vq = v[:, p].copy(), d * v[:, q]
                v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq

    values = np.real(np.diag(h)).copy()
    order = np.argsort(-values, kind="stable")
    return EigResult(values=values[order], vectors=v[:, order])
