"""Dense complex linear algebra used by every other module."""

from typing import Callable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionOverflow,
    DomainError,
    NoConvergence,
    NotHermitian,
)

HERMITIAN_TOL = 1e-10
MAX_DIM = 4096


class EigenSystem(NamedTuple):
    values: np.ndarray  # ascending, real
    vectors: np.ndarray  # columns are orthonormal eigenvectors


def as_matrix(m) -> np.ndarray:
    """Return ``m`` as a square, finite complex array (copy)."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatch(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("matrix has non-finite entries")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(np.transpose(m))


def hermitian_gap(m: np.ndarray) -> float:
    """Max entrywise |m - m^dagger|."""
    return float(np.max(np.abs(m - dagger(m))))


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_matrix(m)
    gap = hermitian_gap(a)
    if gap > tol:
        raise NotHermitian(f"max |m - m^dagger| = {gap:.3e} exceeds {tol:.0e}")
    return (a + dagger(a)) / 2


def projector(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    return np.outer(v, np.conj(v))


def eig_hermitian(m, method: str = "lapack") -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    ``method="lapack"`` calls the LAPACK Hermitian driver through numpy;
    ``method="jacobi"`` runs :func:`jacobi_eigh`. Both satisfy the same
    reconstruction contract.
    """
    a = check_hermitian(m)
    if method == "jacobi":
        return jacobi_eigh(a)
    if method != "lapack":
        raise ValueError(f"unknown method {method!r}")
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenSystem(values, vectors)


def jacobi_eigh(m, max_sweeps: int | None = None) -> EigenSystem:
    """Cyclic Jacobi eigensolver for complex Hermitian matrices.

    Each rotation first removes the phase of the pivot ``a[p, q]`` and then
    applies the real symmetric Jacobi rotation, so the iterate stays
    Hermitian. Sweeps stop once the off-diagonal Frobenius norm is below
    machine precision relative to the whole matrix.
    """
    a = check_hermitian(m)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if max_sweeps is None:
        max_sweeps = 100 * n * n
    scale = max(np.linalg.norm(a), np.finfo(float).tiny)
    thresh = np.finfo(float).eps * scale

    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= thresh / n:
                    continue
                phase = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 if tau == 0 else np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                pc = np.conj(phase)
                rot = np.array([[c, s], [-s * pc, c * pc]], dtype=complex)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = dagger(rot) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                v[:, idx] = v[:, idx] @ rot
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    return EigenSystem(values[order], v[:, order])


def kron(a, b, max_dim: int = MAX_DIM) -> np.ndarray:
    """Tensor product with row-major pairing (i, k) -> i * dim(b) + k."""
    a = as_matrix(a)
    b = as_matrix(b)
    dim = a.shape[0] * b.shape[0]
    if dim > max_dim:
        raise DimensionOverflow(f"kron dimension {dim} exceeds cap {max_dim}")
    return np.kron(a, b)


def kron_all(factors: Sequence, max_dim: int = MAX_DIM) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for f in factors:
        out = kron(out, f, max_dim=max_dim)
    return out


def partial_trace(d, dims: tuple[int, int], keep: str = "first") -> np.ndarray:
    """Trace out one factor of a bipartite operator.

    ``keep="first"`` returns the operator on the first factor, i.e. the
    unique X with tr(A X) = tr((A (x) I) d) for all A.
    """
    d = as_matrix(d)
    da, db = (int(x) for x in dims)
    if da < 1 or db < 1 or d.shape[0] != da * db:
        raise DimensionMismatch(f"dims {dims} do not factor dimension {d.shape[0]}")
    t = d.reshape(da, db, da, db)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def trace_distance(a, b) -> float:
    a = check_hermitian(a)
    b = check_hermitian(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    values = eig_hermitian(a - b).values
    return 0.5 * float(np.sum(np.abs(values)))


def apply_function(d, f: Callable[[float], float]) -> np.ndarray:
    """Spectral calculus: sum_i f(lambda_i) |v_i><v_i|."""
    values, vectors = eig_hermitian(d)
    try:
        fv = np.array([f(float(x)) for x in values], dtype=float)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(f"function undefined on spectrum {values}: {exc}") from exc
    if not np.all(np.isfinite(fv)):
        raise DomainError(f"function not finite on spectrum {values}")
    return (vectors * fv) @ dagger(vectors)
