"""Quantum channels as superoperators, dynamical (Choi) matrices and Kraus sets.

A superoperator ``M`` acts on row-major reshaped density matrices,
``res(Phi(rho)) = M @ res(rho)``.  The dynamical matrix is its reshuffle
``D = M^R`` with respect to the ``(n, n)`` split, stored unnormalized.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .errors import ContractViolation, NotCompletelyPositive, NotTracePreserving
from .linalg import RANK_RTOL, as_matrix, eig_hermitian, max_abs
from .reorderings import dim_pair, res, reshuffle, reshuffle_permutation, unres

VERDICT_TOL = 1e-8
PROB_TOL = 1e-12
UNITARY_TOL = 1e-10


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class Subsystem(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class KrausSet:
    operators: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(as_matrix(k, name="Kraus operator") for k in self.operators)
        if not ops:
            raise ContractViolation("a Kraus set needs at least one operator")
        if any(k.shape != ops[0].shape for k in ops):
            raise ContractViolation("Kraus operators must share one shape")
        object.__setattr__(self, "operators", ops)

    @property
    def dim_in(self) -> int:
        return self.operators[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.operators[0].shape[0]

    def __len__(self) -> int:
        return len(self.operators)


@dataclass(frozen=True)
class Superoperator:
    matrix: np.ndarray
    dim_in: int
    dim_out: int

    def __post_init__(self):
        mat = as_matrix(self.matrix, name="superoperator")
        if mat.shape != (self.dim_out**2, self.dim_in**2):
            raise ContractViolation(
                f"superoperator for {self.dim_in}->{self.dim_out} must be "
                f"{self.dim_out**2}x{self.dim_in**2}, got {mat.shape}"
            )
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def square(cls, matrix) -> "Superoperator":
        mat = as_matrix(matrix, name="superoperator")
        n = int(round(np.sqrt(mat.shape[0])))
        if mat.shape[0] != mat.shape[1] or n * n != mat.shape[0]:
            raise ContractViolation(f"superoperator must be n^2 x n^2, got {mat.shape}")
        return cls(mat, n, n)


@dataclass(frozen=True)
class DynamicalMatrix:
    matrix: np.ndarray
    dim_in: int
    dim_out: int

    def __post_init__(self):
        mat = as_matrix(self.matrix, name="dynamical matrix")
        side = self.dim_in * self.dim_out
        if mat.shape != (side, side):
            raise ContractViolation(f"dynamical matrix must be {side}x{side}, got {mat.shape}")
        object.__setattr__(self, "matrix", mat)

    @classmethod
    def square(cls, matrix) -> "DynamicalMatrix":
        mat = as_matrix(matrix, name="dynamical matrix")
        n = int(round(np.sqrt(mat.shape[0])))
        if mat.shape[0] != mat.shape[1] or n * n != mat.shape[0]:
            raise ContractViolation(f"dynamical matrix must be n^2 x n^2, got {mat.shape}")
        return cls(mat, n, n)


ChannelRep = Union[KrausSet, Superoperator, DynamicalMatrix]


def _require_square(c: ChannelRep) -> int:
    if c.dim_in != c.dim_out:
        raise ContractViolation(
            f"operation needs a channel with equal input and output dimension, "
            f"got {c.dim_in}->{c.dim_out}"
        )
    return c.dim_in


def _check_state(c: ChannelRep, rho) -> np.ndarray:
    rho = as_matrix(rho, name="rho")
    if rho.shape != (c.dim_in, c.dim_in):
        raise ContractViolation(f"channel input must be {c.dim_in}x{c.dim_in}, got {rho.shape}")
    return rho


# --- conversions -----------------------------------------------------------


def superop_from_kraus(k: KrausSet) -> Superoperator:
    """``M = sum_i K_i (x) conj(K_i)``."""
    m = sum(np.kron(op, op.conj()) for op in k.operators)
    return Superoperator(m, k.dim_in, k.dim_out)


def superop_from_function(f: Callable[[np.ndarray], np.ndarray], n: int) -> Superoperator:
    """Matrix of a linear map on ``n x n`` matrices, ``M[k, l] = tr[eps_k^dagger f(eps_l)]``.

    Linearity of `f` is the caller's responsibility; `f` is called once per
    matrix unit and must be reentrant.
    """
    if n < 1:
        raise ContractViolation(f"dimension must be positive, got {n}")
    cols = []
    for l in range(n * n):
        unit = np.zeros((n, n), dtype=np.complex128)
        unit.flat[l] = 1.0
        out = as_matrix(f(unit), name="map output")
        if out.shape != (n, n):
            raise ContractViolation(f"map returned shape {out.shape}, expected {(n, n)}")
        cols.append(out.reshape(-1))
    return Superoperator(np.column_stack(cols), n, n)


def dynamical_from_superop(s: Superoperator) -> DynamicalMatrix:
    """``D = M^R(n, n)``."""
    n = _require_square(s)
    return DynamicalMatrix(reshuffle(s.matrix, (n, n)), n, n)


def superop_from_dynamical(d: DynamicalMatrix) -> Superoperator:
    # the square reshuffle is an involution
    n = _require_square(d)
    return Superoperator(reshuffle(d.matrix, (n, n)), n, n)


def to_superoperator(c: ChannelRep) -> Superoperator:
    if isinstance(c, Superoperator):
        return c
    if isinstance(c, KrausSet):
        return superop_from_kraus(c)
    if isinstance(c, DynamicalMatrix):
        return superop_from_dynamical(c)
    raise TypeError(f"not a channel representation: {type(c).__name__}")


def to_dynamical(c: ChannelRep) -> DynamicalMatrix:
    if isinstance(c, DynamicalMatrix):
        return c
    return dynamical_from_superop(to_superoperator(c))


def _hermitian_part_spectrum(mat: np.ndarray):
    return eig_hermitian((mat + mat.conj().T) / 2)


def canonical_kraus(d: DynamicalMatrix, tol: float = VERDICT_TOL) -> tuple[np.ndarray, KrausSet]:
    """Canonical Kraus operators and their weights from a dynamical matrix.

    Returns the retained eigenvalues (equal to the singular values for a
    positive ``D``) and ``K_i = sqrt(s_i) * unres(v_i)``.  Eigenvalues in
    ``[-tol, 0)`` are clamped to zero; anything lower raises
    :class:`NotCompletelyPositive`.
    """
    n = _require_square(d)
    mat = d.matrix
    if max_abs(mat - mat.conj().T) > tol * max(1.0, max_abs(mat)):
        raise ContractViolation("dynamical matrix is not Hermitian within tolerance")
    eig = _hermitian_part_spectrum(mat)
    lowest = float(eig.values[-1])
    if lowest < -tol:
        raise NotCompletelyPositive(lowest, tol)
    values = np.clip(eig.values, 0.0, None)
    top = values[0]
    keep = values > RANK_RTOL * top if top > 0 else np.zeros_like(values, dtype=bool)
    if not np.any(keep):
        raise ContractViolation("dynamical matrix is zero; the map has no Kraus operators")
    ops = tuple(
        np.sqrt(values[i]) * unres(eig.vectors[:, i], (n, n)) for i in np.flatnonzero(keep)
    )
    return values[keep], KrausSet(ops)


def kraus_from_dynamical(d: DynamicalMatrix, tol: float = VERDICT_TOL) -> KrausSet:
    return canonical_kraus(d, tol)[1]


def to_kraus(c: ChannelRep, tol: float = VERDICT_TOL) -> KrausSet:
    if isinstance(c, KrausSet):
        return c
    return kraus_from_dynamical(to_dynamical(c), tol)


def jamiolkowski_state(d: DynamicalMatrix, tol: float = VERDICT_TOL) -> np.ndarray:
    """Normalized dynamical matrix ``D / N`` of a CPTP map; a density matrix."""
    n = _require_square(d)
    mat = d.matrix
    if max_abs(mat - mat.conj().T) > tol * max(1.0, max_abs(mat)):
        raise ContractViolation("dynamical matrix is not Hermitian within tolerance")
    lowest = float(_hermitian_part_spectrum(mat).values[-1])
    if lowest < -tol:
        raise NotCompletelyPositive(lowest, tol)
    trace = complex(np.trace(mat))
    if abs(trace - n) > tol:
        raise NotTracePreserving(trace, n, tol)
    return mat / n


# --- action ------------------------------------------------------------------


def apply_kraus(k: KrausSet, rho) -> np.ndarray:
    rho = _check_state(k, rho)
    return sum(op @ rho @ op.conj().T for op in k.operators)


def apply_channel(c: ChannelRep, rho) -> np.ndarray:
    if isinstance(c, KrausSet):
        return apply_kraus(c, rho)
    rho = _check_state(c, rho)
    s = to_superoperator(c)
    return unres(s.matrix @ res(rho), (s.dim_out, s.dim_out))


# --- verdicts ----------------------------------------------------------------


def choi_min_eigenvalue(c: ChannelRep) -> float:
    """Smallest eigenvalue of the Hermitian part of the dynamical matrix."""
    _require_square(c)
    return float(_hermitian_part_spectrum(to_dynamical(c).matrix).values[-1])


def is_completely_positive(c: ChannelRep, tol: float = VERDICT_TOL) -> bool:
    """Choi test: ``D`` Hermitian within `tol` and no eigenvalue below ``-tol``."""
    _require_square(c)
    mat = to_dynamical(c).matrix
    if max_abs(mat - mat.conj().T) > tol:
        return False
    return choi_min_eigenvalue(c) >= -tol


def trace_dual(c: ChannelRep) -> np.ndarray:
    """``sum_i K_i^dagger K_i``, computed without Kraus operators when needed."""
    if isinstance(c, KrausSet):
        return sum(op.conj().T @ op for op in c.operators)
    s = to_superoperator(c)
    ident = res(np.eye(s.dim_out))
    return unres(s.matrix.T @ ident, (s.dim_in, s.dim_in)).T


def is_trace_preserving(c: ChannelRep, tol: float = VERDICT_TOL) -> bool:
    """``max |sum_i K_i^dagger K_i - 1| <= tol``."""
    return max_abs(trace_dual(c) - np.eye(c.dim_in)) <= tol


def image_of_identity(c: ChannelRep) -> np.ndarray:
    return apply_channel(c, np.eye(c.dim_in))


def is_unital(c: ChannelRep, tol: float = VERDICT_TOL) -> bool:
    _require_square(c)
    return max_abs(image_of_identity(c) - np.eye(c.dim_out)) <= tol


# --- families ----------------------------------------------------------------


def identity_channel(n: int) -> Superoperator:
    return Superoperator(np.eye(n * n), n, n)


def transpose_channel(n: int) -> Superoperator:
    return superop_from_function(lambda r: r.T, n)


def depolarizing_channel(n: int, p: float) -> Superoperator:
    """``rho -> p rho + (1 - p) tr(rho) 1/n``."""
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"depolarizing parameter must lie in [0, 1], got {p}")
    ident = np.eye(n) / n
    return superop_from_function(lambda r: p * r + (1 - p) * np.trace(r) * ident, n)


def _check_distribution(probs: np.ndarray) -> None:
    if np.any(probs < 0.0) or np.any(probs > 1.0):
        raise ContractViolation("probabilities must lie in [0, 1]")
    if abs(float(np.sum(probs)) - 1.0) > PROB_TOL:
        raise ContractViolation(f"probabilities sum to {float(np.sum(probs))!r}, not 1")


def shift_matrix(d: int) -> np.ndarray:
    """``X_d = sum_j |j - 1 mod d><j|``."""
    x = np.zeros((d, d), dtype=np.complex128)
    for j in range(d):
        x[(j - 1) % d, j] = 1.0
    return x


def clock_matrix(d: int) -> np.ndarray:
    """``Z_d = diag(1, w, ..., w^(d-1))`` with ``w = exp(2 pi i / d)``."""
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def generalized_pauli_channel(d: int, probs) -> KrausSet:
    """Kraus set ``{sqrt(p_ij) X_d^i Z_d^j}``; zero-probability terms are dropped."""
    if d < 1:
        raise ContractViolation(f"dimension must be positive, got {d}")
    probs = np.asarray(probs, dtype=float)
    if probs.shape != (d, d):
        raise ContractViolation(f"probability table must be {d}x{d}, got {probs.shape}")
    _check_distribution(probs)
    x, z = shift_matrix(d), clock_matrix(d)
    ops = []
    for i in range(d):
        for j in range(d):
            if probs[i, j] > 0.0:
                u = np.linalg.matrix_power(x, i) @ np.linalg.matrix_power(z, j)
                ops.append(np.sqrt(probs[i, j]) * u)
    return KrausSet(tuple(ops))


def random_unitary_channel(unitaries: Sequence, probs: Sequence[float]) -> KrausSet:
    """Kraus set ``{sqrt(p_i) U_i}`` for unitaries `U_i` mixed with weights `p_i`."""
    us = [as_matrix(u, name="unitary") for u in unitaries]
    probs = np.asarray(probs, dtype=float)
    if not us or probs.shape != (len(us),):
        raise ContractViolation("need one probability per unitary")
    _check_distribution(probs)
    for u in us:
        if u.shape != (us[0].shape[0],) * 2:
            raise ContractViolation("unitaries must be square and of equal dimension")
        if max_abs(u.conj().T @ u - np.eye(u.shape[0])) > UNITARY_TOL:
            raise ContractViolation("member of a random unitary channel is not unitary")
    return KrausSet(tuple(np.sqrt(p) * u for p, u in zip(probs, us) if p > 0.0))


# --- composition -------------------------------------------------------------


def compose_channels(phi: ChannelRep, psi: ChannelRep) -> Superoperator:
    """Superoperator of ``phi (x) psi`` acting on ``M_{n_phi n_psi}``.

    Built as ``M_R^-1 (M_phi (x) M_psi) M_R`` with ``M_R`` the reshuffle
    permutation for the ``(n_phi, n_psi)`` split.
    """
    a, b = to_superoperator(phi), to_superoperator(psi)
    na, nb = _require_square(a), _require_square(b)
    m_r = reshuffle_permutation((na, nb), (na, nb))
    # permutation matrices are orthogonal
    mat = m_r.T @ np.kron(a.matrix, b.matrix) @ m_r
    return Superoperator(mat, na * nb, na * nb)


def extend_channel(phi: ChannelRep, m: int, side: Side | str = Side.LEFT) -> Superoperator:
    """``phi (x) 1_m`` for ``Side.LEFT``, ``1_m (x) phi`` for ``Side.RIGHT``."""
    side = Side(side)
    ident = identity_channel(m)
    if side is Side.LEFT:
        return compose_channels(phi, ident)
    return compose_channels(ident, phi)


# --- partial operations ------------------------------------------------------


def _bipartite(rho, dims) -> tuple[np.ndarray, int, int]:
    m, n = dim_pair(dims)
    rho = as_matrix(rho, name="rho")
    if rho.shape != (m * n, m * n):
        raise ContractViolation(f"split {(m, n)} needs a {m * n}x{m * n} matrix, got {rho.shape}")
    return rho.reshape(m, n, m, n), m, n


def partial_transpose(rho, dims, which: Subsystem | str = Subsystem.FIRST) -> np.ndarray:
    t, m, n = _bipartite(rho, dims)
    if Subsystem(which) is Subsystem.FIRST:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(m * n, m * n).copy()


def partial_trace(rho, dims, which: Subsystem | str = Subsystem.SECOND) -> np.ndarray:
    """Trace out subsystem `which`."""
    t, _, _ = _bipartite(rho, dims)
    if Subsystem(which) is Subsystem.FIRST:
        return np.einsum("aiaj->ij", t)
    return np.einsum("iaja->ij", t)


def ppt_min_eigenvalue(rho, dims, tol: float = VERDICT_TOL) -> float:
    rho = as_matrix(rho, name="rho")
    if rho.shape[0] != rho.shape[1] or max_abs(rho - rho.conj().T) > tol:
        raise ContractViolation("PPT test needs a Hermitian matrix")
    pt = partial_transpose(rho, dims, Subsystem.FIRST)
    return float(_hermitian_part_spectrum(pt).values[-1])


def is_ppt(rho, dims, tol: float = VERDICT_TOL) -> bool:
    """Positive partial transpose; decides separability exactly for two qubits."""
    return ppt_min_eigenvalue(rho, dims, tol) >= -tol
