"""Density operators, pure states, decompositions and seeded sampling.

Random objects are drawn from numpy's ``default_rng`` (the PCG64 bit
generator) seeded with the integer passed by the caller.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadDimension,
    InfeasibleCount,
    NotAProbabilityVector,
    NotPositive,
    NotUnitNorm,
    TraceNotOne,
)
from .matrices import HERMITIAN_TOL, check_hermitian, dagger, eig_hermitian, projector

DENSITY_TOL = 1e-10
RANK_CUTOFF = 1e-12


def validate_density(m, tol: float = DENSITY_TOL) -> np.ndarray:
    """Check the density-operator invariants and return a cleaned copy.

    Eigenvalues in ``[-tol, 0)`` are clipped to zero and the trace is
    renormalized. Raises NotHermitian, NotPositive or TraceNotOne.
    """
    a = check_hermitian(m, tol)
    values, vectors = eig_hermitian(a)
    if values[0] < -tol:
        raise NotPositive(f"minimum eigenvalue {values[0]:.3e} is below -{tol:.0e}")
    tr = float(np.sum(values))
    if abs(tr - 1.0) > tol:
        raise TraceNotOne(f"trace {tr:.12g} differs from 1 by {abs(tr - 1.0):.3e}")
    if values[0] < 0:
        values = np.clip(values, 0.0, None)
        values = values / values.sum()
        a = (vectors * values) @ dagger(vectors)
    return a


def is_density(m, tol: float = DENSITY_TOL) -> bool:
    try:
        validate_density(m, tol)
    except ValueError:
        return False
    return True


def pure_state(v, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate a unit state vector."""
    v = np.array(v, dtype=complex).reshape(-1)
    norm = np.linalg.norm(v)
    if abs(norm - 1.0) > tol:
        raise NotUnitNorm(f"state vector norm {norm:.12g} is not 1")
    return v


def basis_state(dim: int, index: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def check_probability_vector(p, tol: float = 1e-12) -> np.ndarray:
    p = np.asarray(p, dtype=float).reshape(-1)
    if p.size == 0 or not np.all(np.isfinite(p)):
        raise NotAProbabilityVector("probability vector must be non-empty and finite")
    if np.any(p < 0):
        raise NotAProbabilityVector(f"negative entry {p.min():.3e}")
    if abs(p.sum() - 1.0) > tol:
        raise NotAProbabilityVector(f"entries sum to {p.sum():.15g}")
    return p


@dataclass(frozen=True)
class Decomposition:
    """Convex decomposition ``sum_i weights[i] * components[i]``."""

    weights: np.ndarray
    components: list = field(repr=False)

    def __post_init__(self):
        w = check_probability_vector(self.weights, tol=DENSITY_TOL)
        object.__setattr__(self, "weights", w)
        if len(self.components) != len(w):
            raise ValueError("weights and components differ in length")

    def reconstruct(self) -> np.ndarray:
        return sum(w * c for w, c in zip(self.weights, self.components))


def rank(d, cutoff: float = RANK_CUTOFF) -> int:
    return int(np.sum(eig_hermitian(d).values > cutoff))


def schatten(d) -> Decomposition:
    """Spectral decomposition into orthogonal rank-one projectors.

    Zero-weight terms are dropped; for degenerate spectra the basis is
    whatever the eigensolver returns.
    """
    d = validate_density(d)
    values, vectors = eig_hermitian(d)
    keep = values > RANK_CUTOFF
    weights = values[keep]
    weights = weights / weights.sum()
    comps = [projector(vectors[:, i]) for i in np.flatnonzero(keep)]
    return Decomposition(weights, comps)


def mixing_entropy(dec: Decomposition) -> float:
    """Shannon entropy of the decomposition weights, in nats."""
    w = dec.weights[dec.weights > 0]
    return float(-np.sum(w * np.log(w)))


def _rng(seed):
    return np.random.default_rng(seed)


def ginibre(rows: int, cols: int, rng) -> np.ndarray:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_isometry(rows: int, cols: int, rng) -> np.ndarray:
    """Haar-distributed ``rows x cols`` isometry (QR of Ginibre, phases fixed)."""
    q, r = np.linalg.qr(ginibre(rows, cols, rng))
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_unitary(dim: int, rng) -> np.ndarray:
    return random_isometry(dim, dim, rng)


def random_pure_state(dim: int, rng) -> np.ndarray:
    v = ginibre(dim, 1, rng).reshape(-1)
    return v / np.linalg.norm(v)


def random_density(dim: int, seed) -> np.ndarray:
    """Full-rank state G G^dagger / tr(G G^dagger), G a seeded Ginibre matrix."""
    if not 2 <= dim <= 64:
        raise BadDimension(f"dim must be in [2, 64], got {dim}")
    return random_density_from(dim, _rng(seed))


def random_density_from(dim: int, rng) -> np.ndarray:
    g = ginibre(dim, dim, rng)
    m = g @ dagger(g)
    m = (m + dagger(m)) / 2
    return m / np.trace(m).real


def random_pure_decomposition(d, count: int, seed) -> Decomposition:
    """Decompose ``d`` into ``count`` pure states.

    With ``W = [sqrt(l_1) v_1, ..., sqrt(l_r) v_r]`` from the Schatten
    decomposition and a Haar ``count x r`` isometry ``U``, the vectors
    ``W U[j, :]^*`` give sum_j |w_j><w_j| = W W^dagger = d. When ``count``
    equals the rank the Schatten decomposition itself is returned in a
    seeded random order.
    """
    sch = schatten(d)
    r = len(sch.weights)
    if count < r:
        raise InfeasibleCount(f"count {count} is below rank {r}")
    rng = _rng(seed)
    if count == r:
        order = rng.permutation(r)
        return Decomposition(sch.weights[order], [sch.components[i] for i in order])

    values, vectors = eig_hermitian(validate_density(d))
    keep = values > RANK_CUTOFF
    w = vectors[:, keep] * np.sqrt(values[keep])
    u = random_isometry(count, r, rng)
    vecs = w @ np.conj(u).T  # column j is W U[j, :]^*
    weights = np.sum(np.abs(vecs) ** 2, axis=0)
    comps = [projector(vecs[:, j] / np.sqrt(weights[j])) for j in range(count)]
    return Decomposition(weights / weights.sum(), comps)

