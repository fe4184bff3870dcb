"""Random test objects and brute-force oracles, independent of the package code."""

import numpy as np


def rand_matrix(rng, rows, cols=None):
    cols = rows if cols is None else cols
    return rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))


def rand_unitary(rng, n):
    q, r = np.linalg.qr(rand_matrix(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def rand_density(rng, n, rank=None):
    g = rand_matrix(rng, n, n if rank is None else rank)
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def rand_hermitian(rng, n):
    g = rand_matrix(rng, n)
    return (g + g.conj().T) / 2


def rand_kraus_tp(rng, n, count=None):
    """Random trace-preserving Kraus operators: K_i S^{-1/2} with S = sum K^dagger K."""
    count = n * n if count is None else count
    ops = [rand_matrix(rng, n) for _ in range(count)]
    s = sum(k.conj().T @ k for k in ops)
    w, v = np.linalg.eigh(s)
    s_inv_half = v @ np.diag(w ** -0.5) @ v.conj().T
    return [k @ s_inv_half for k in ops]


def unit(n, k):
    """Row-major matrix unit: res(unit(n, k)) is the k-th standard basis vector."""
    e = np.zeros((n, n), dtype=complex)
    e[k // n, k % n] = 1.0
    return e


def reshuffle_by_trace(a, m, n):
    """Reshuffle from its defining trace formula, one entry at a time."""
    out = np.zeros((m * m, n * n), dtype=complex)
    for i in range(m * m):
        for j in range(n * n):
            out[i, j] = np.trace(np.kron(unit(m, i), unit(n, j)).conj().T @ a)
    return out


def reshuffle_alt_by_trace(a, m, n):
    out = np.zeros((n * n, m * m), dtype=complex)
    for i in range(n * n):
        for j in range(m * m):
            out[i, j] = np.trace(np.kron(unit(m, j).T, unit(n, i).T).conj().T @ a)
    return out


def superop_by_loop(f, n):
    """M[k, l] = tr[eps_k^dagger f(eps_l)] by explicit double loop."""
    out = np.zeros((n * n, n * n), dtype=complex)
    for k in range(n * n):
        for l in range(n * n):
            out[k, l] = np.trace(unit(n, k).conj().T @ f(unit(n, l)))
    return out


def partial_trace_by_loop(rho, m, n, which):
    if which == "second":
        out = np.zeros((m, m), dtype=complex)
        for i in range(m):
            for j in range(m):
                for k in range(n):
                    out[i, j] += rho[i * n + k, j * n + k]
        return out
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            for k in range(m):
                out[i, j] += rho[k * n + i, k * n + j]
    return out


def assert_close(actual, expected, atol):
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    assert actual.shape == expected.shape, (actual.shape, expected.shape)
    err = np.max(np.abs(actual - expected)) if actual.size else 0.0
    assert err <= atol, f"max deviation {err:.3e} > {atol:.1e}"


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
M_T = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def _perm_from_rows(ones):
    p = np.zeros((len(ones), len(ones)), dtype=int)
    for r, c in enumerate(ones):
        p[r, c] = 1
    return p


# 16x16 reshuffle permutation for the (2, 2) split, transcribed row by row
M_R22 = _perm_from_rows([0, 1, 4, 5, 2, 3, 6, 7, 8, 9, 12, 13, 10, 11, 14, 15])
# superoperator of the partial transpose on the first qubit, transcribed row by row
M_T1 = _perm_from_rows([0, 1, 8, 9, 4, 5, 12, 13, 2, 3, 10, 11, 6, 7, 14, 15])
