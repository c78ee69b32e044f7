"""Independent reference computations for the test-suite.

Nothing here calls the library path it is used to check.
"""

import math

import numpy as np
import scipy.linalg


def rng(seed):
    return np.random.default_rng(seed)


def rand_herm(n, g):
    a = g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))
    return (a + a.conj().T) / 2


def rand_psd(n, g, rank=None):
    rank = n if rank is None else rank
    a = g.standard_normal((n, rank)) + 1j * g.standard_normal((n, rank))
    return a @ a.conj().T


def rand_state(n, g, rank=None):
    m = rand_psd(n, g, rank)
    return m / np.trace(m).real


def haar_unitary(n, g):
    z = g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def ket(*amps):
    v = np.array(amps, dtype=complex)
    return v / np.linalg.norm(v)


def entropy_from_eigs(m):
    w = np.linalg.eigvalsh(m)
    w = w[w > 1e-300]
    return float(-np.sum(w * np.log(w)))


def entropy_logm(m):
    return float(-np.real(np.trace(m @ scipy.linalg.logm(m))))


def kron_loops(a, b):
    n, m = a.shape[0], b.shape[0]
    out = np.zeros((n * m, n * m), dtype=complex)
    for i in range(n):
        for j in range(n):
            for k in range(m):
                for l in range(m):
                    out[i * m + k, j * m + l] = a[i, j] * b[k, l]
    return out


def ptrace_loops(d, da, db, keep):
    if keep == "first":
        out = np.zeros((da, da), dtype=complex)
        for i in range(da):
            for j in range(da):
                out[i, j] = sum(d[i * db + k, j * db + k] for k in range(db))
    else:
        out = np.zeros((db, db), dtype=complex)
        for k in range(db):
            for l in range(db):
                out[k, l] = sum(d[i * db + k, i * db + l] for i in range(da))
    return out


def log_multinomial_lgamma(occ):
    n = sum(occ)
    return math.lgamma(n + 1) - sum(math.lgamma(x + 1) for x in occ)


def composed_qubit_pinchings(k):
    """Steer |0> to |1> with explicit 2x2 projectors; returns the final state."""
    rho = np.array([[1, 0], [0, 0]], dtype=float)
    for n in range(1, k + 1):
        a = math.pi * n / (2 * k)
        psi = np.array([math.cos(a), math.sin(a)])
        perp = np.array([-math.sin(a), math.cos(a)])
        p, q = np.outer(psi, psi), np.outer(perp, perp)
        rho = p @ rho @ p + q @ rho @ q
    return rho


def random_povm(n, outcomes, g):
    """A_j = S^{-1/2} B_j S^{-1/2} with Wishart B_j and S = sum B_j."""
    bs = [rand_psd(n, g) for _ in range(outcomes)]
    s = sum(bs)
    w, v = np.linalg.eigh(s)
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    return [inv_sqrt @ b @ inv_sqrt for b in bs]


def feasible_state(h, e, g, n):
    """Random state q with tr(qH) = e.

    A random full-rank state is mixed with the ground- or top-eigenvector
    projector on the other side of ``e``; the mixing weight is the closed-form
    root of the (linear) energy condition.
    """
    w, v = np.linalg.eigh(h)
    r = rand_state(n, g)
    er = float(np.real(np.trace(r @ h)))
    idx = 0 if er > e else -1
    p = np.outer(v[:, idx], v[:, idx].conj())
    ep = w[idx]
    t = (e - er) / (ep - er)
    return (1 - t) * r + t * p


def feasible_distribution(levels, e, g):
    m = len(levels)
    r = g.dirichlet(np.ones(m))
    er = r @ levels
    idx = 0 if er > e else m - 1
    vertex = np.zeros(m)
    vertex[idx] = 1.0
    t = (e - er) / (levels[idx] - er)
    return (1 - t) * r + t * vertex


def qubit_mi_grid(weights, states, polar=721, azimuth=361):
    """Best mutual information over projective qubit measurements on a Bloch-sphere grid."""
    weights = np.asarray(weights, dtype=float)
    states = np.asarray(states, dtype=complex)
    th, ph = np.meshgrid(np.linspace(0, math.pi, polar), np.linspace(0, 2 * math.pi, azimuth), indexing="ij")
    b0 = np.stack([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)], axis=-1)
    p0 = np.abs(np.einsum("abk,ik->abi", b0.conj(), states)) ** 2
    values = _h2(p0 @ weights) - _h2(p0) @ weights
    idx = np.unravel_index(np.argmax(values), values.shape)
    return float(values[idx]), (float(th[idx]), float(ph[idx]))


def _h2(x):
    x = np.clip(x, 1e-300, 1 - 1e-16)
    return -x * np.log(x) - (1 - x) * np.log1p(-x)
