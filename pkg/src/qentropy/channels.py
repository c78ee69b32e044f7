"""Measurement conditional expectations and operational partitions of unity.

A pinching basis is a unitary matrix whose columns are the basis vectors.
An operational partition is a sequence of Kraus matrices with
sum_i V_i^dagger V_i = I.
"""

import math
from typing import Callable, Sequence

import numpy as np

from .entropy import eta, s_f
from .errors import DimensionMismatch, NotABasis, NotAPartition, NotAProjectionFamily, NotOrthogonal
from .matrices import as_matrix, dagger, projector, trace_distance
from .states import pure_state, validate_density

BASIS_TOL = 1e-10
PARTITION_TOL = 1e-8


def check_basis(basis, tol: float = BASIS_TOL) -> np.ndarray:
    b = as_matrix(basis)
    gap = np.max(np.abs(dagger(b) @ b - np.eye(b.shape[0])))
    if gap > tol:
        raise NotABasis(f"Gram matrix differs from identity by {gap:.3e}")
    return b


def check_partition(kraus: Sequence, tol: float = PARTITION_TOL) -> list[np.ndarray]:
    ops = [as_matrix(v) for v in kraus]
    if not ops:
        raise NotAPartition("empty operational partition")
    dim = ops[0].shape[0]
    if any(v.shape != (dim, dim) for v in ops):
        raise DimensionMismatch("Kraus operators differ in dimension")
    total = sum(dagger(v) @ v for v in ops)
    gap = np.max(np.abs(total - np.eye(dim)))
    if gap > tol:
        raise NotAPartition(f"sum V*V differs from identity by {gap:.3e}")
    return ops


def _same_dim(a: np.ndarray, dim: int):
    if a.shape[0] != dim:
        raise DimensionMismatch(f"operator of dimension {a.shape[0]} used with dimension {dim}")


def pinch(t, basis) -> np.ndarray:
    """T -> sum_i <psi_i|T|psi_i> |psi_i><psi_i|."""
    t = as_matrix(t)
    b = check_basis(basis)
    _same_dim(t, b.shape[0])
    diag = np.einsum("ji,jk,ki->i", np.conj(b), t, b)
    return (b * diag) @ dagger(b)


def basis_projectors(basis) -> list[np.ndarray]:
    b = check_basis(basis)
    return [projector(b[:, i]) for i in range(b.shape[1])]


def check_projection_family(projections: Sequence, tol: float = PARTITION_TOL) -> list[np.ndarray]:
    ps = [as_matrix(p) for p in projections]
    if not ps:
        raise NotAProjectionFamily("no projections given")
    dim = ps[0].shape[0]
    if any(p.shape != (dim, dim) for p in ps):
        raise NotAProjectionFamily("projections differ in dimension")
    for i, p in enumerate(ps):
        if np.max(np.abs(p - dagger(p))) > tol or np.max(np.abs(p @ p - p)) > tol:
            raise NotAProjectionFamily(f"element {i} is not a Hermitian idempotent")
        for j in range(i):
            if np.max(np.abs(p @ ps[j])) > tol:
                raise NotAProjectionFamily(f"elements {j} and {i} are not orthogonal")
    if np.max(np.abs(sum(ps) - np.eye(dim))) > tol:
        raise NotAProjectionFamily("projections do not sum to the identity")
    return ps


def pinch_projective(t, projections: Sequence) -> np.ndarray:
    """T -> sum_i P_i T P_i for a resolution of the identity into projections."""
    t = as_matrix(t)
    ps = check_projection_family(projections)
    _same_dim(t, ps[0].shape[0])
    return sum(p @ t @ p for p in ps)


def apply_schrodinger(kraus: Sequence, d) -> np.ndarray:
    """D -> sum_i V_i D V_i^dagger; the result is validated as a state."""
    ops = check_partition(kraus)
    d = validate_density(d)
    _same_dim(d, ops[0].shape[0])
    return validate_density(sum(v @ d @ dagger(v) for v in ops))


def apply_heisenberg(kraus: Sequence, a) -> np.ndarray:
    """A -> sum_i V_i^dagger A V_i."""
    ops = check_partition(kraus)
    a = as_matrix(a)
    _same_dim(a, ops[0].shape[0])
    return sum(dagger(v) @ a @ v for v in ops)


def check_monotonicity(d, basis, f: Callable[[float], float] = eta) -> tuple[float, float]:
    """Return (S_f(D), S_f(E(D))) for the pinching E in ``basis``.

    For concave f the second value is never smaller.
    """
    d = validate_density(d)
    return s_f(d, f), s_f(pinch(d, basis), f)


def extend_to_basis(psi) -> np.ndarray:
    """Complete a unit vector to an orthonormal basis, ``psi`` first.

    The standard basis vector with the largest overlap with ``psi`` is
    dropped; the rest are Gram-Schmidt orthonormalized in index order.
    """
    psi = pure_state(psi)
    n = psi.size
    drop = int(np.argmax(np.abs(psi)))
    cols = [psi]
    for i in range(n):
        if i == drop:
            continue
        v = np.zeros(n, dtype=complex)
        v[i] = 1.0
        for _ in range(2):
            for c in cols:
                v = v - (np.conj(c) @ v) * c
        cols.append(v / np.linalg.norm(v))
    return np.column_stack(cols)


def steering_sequence(phi1, phi2, k: int) -> list[np.ndarray]:
    """States E_n(...E_1(|phi1><phi1|)...) for n = 1..k.

    E_n pinches in a basis extending
    cos(pi n / 2k) |phi1> + sin(pi n / 2k) |phi2>.
    """
    phi1 = pure_state(phi1)
    phi2 = pure_state(phi2)
    if phi1.size != phi2.size:
        raise DimensionMismatch("phi1 and phi2 differ in dimension")
    overlap = abs(np.vdot(phi1, phi2))
    if overlap > BASIS_TOL:
        raise NotOrthogonal(f"|<phi1|phi2>| = {overlap:.3e}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    rho = projector(phi1)
    states = []
    for n in range(1, k + 1):
        angle = math.pi * n / (2 * k)
        psi = math.cos(angle) * phi1 + math.sin(angle) * phi2
        rho = pinch(rho, extend_to_basis(psi))
        states.append(rho)
    return states


def fidelity_to_pure(rho, phi) -> float:
    """<phi|rho|phi>."""
    phi = np.asarray(phi, dtype=complex)
    return float(np.real(np.conj(phi) @ np.asarray(rho) @ phi))


def steering_fidelity_closed_form(k: int) -> float:
    """Final qubit fidelity (1 + cos(pi/k)^k) / 2.

    Each pinching projects the Bloch vector onto an axis turned by pi/k
    from the previous one, shrinking its length by cos(pi/k).
    """
    return 0.5 * (1.0 + math.cos(math.pi / k) ** k)


def steering_table(phi1, phi2, k: int) -> list[dict]:
    """Rows of (k, step, fidelity, trace_distance) for the steering run."""
    target = projector(phi2)
    rows = []
    for step, rho in enumerate(steering_sequence(phi1, phi2, k), start=1):
        rows.append({
            "k": k,
            "step": step,
            "fidelity": fidelity_to_pure(rho, phi2),
            "trace_distance": trace_distance(rho, target),
        })
    return rows
