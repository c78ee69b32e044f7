"""Noiseless quantum channel: ensembles, POVMs and transmitted information."""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channels import apply_schrodinger
from .entropy import eta, von_neumann
from .errors import DimensionMismatch, NotAPovm
from .matrices import as_matrix, dagger, eig_hermitian, projector
from .states import _rng, check_probability_vector, pure_state, random_unitary, validate_density

POVM_TOL = 1e-8


@dataclass(frozen=True)
class Ensemble:
    """Messages sent as pure states ``states[i]`` with probability ``weights[i]``."""

    weights: np.ndarray
    states: np.ndarray  # shape (count, dim), rows are unit vectors

    def __post_init__(self):
        w = check_probability_vector(self.weights, tol=1e-10)
        s = np.array(self.states, dtype=complex)
        if s.ndim != 2 or s.shape[0] != w.size:
            raise DimensionMismatch("need one state vector per weight")
        for v in s:
            pure_state(v)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "states", s)

    @property
    def dim(self) -> int:
        return self.states.shape[1]


def check_povm(elements: Sequence, tol: float = POVM_TOL) -> list[np.ndarray]:
    ops = [as_matrix(a) for a in elements]
    if not ops:
        raise NotAPovm("empty POVM")
    dim = ops[0].shape[0]
    if any(a.shape != (dim, dim) for a in ops):
        raise DimensionMismatch("POVM elements differ in dimension")
    for j, a in enumerate(ops):
        if np.max(np.abs(a - dagger(a))) > tol:
            raise NotAPovm(f"element {j} is not Hermitian")
        low = eig_hermitian((a + dagger(a)) / 2).values[0]
        if low < -tol:
            raise NotAPovm(f"element {j} has eigenvalue {low:.3e}")
    gap = np.max(np.abs(sum(ops) - np.eye(dim)))
    if gap > tol:
        raise NotAPovm(f"elements sum to identity only up to {gap:.3e}")
    return ops


def projective_povm(basis) -> list[np.ndarray]:
    b = np.asarray(basis, dtype=complex)
    return [projector(b[:, j]) for j in range(b.shape[1])]


def ensemble_state(ens: Ensemble) -> np.ndarray:
    """D_in = sum_i w_i |psi_i><psi_i|."""
    d = sum(w * projector(v) for w, v in zip(ens.weights, ens.states))
    return validate_density(d)


def channel_matrix(ens: Ensemble, povm: Sequence, channel: Sequence | None = None) -> np.ndarray:
    """p[j, i] = tr(T(|psi_i><psi_i|) A_j): outcome j given message i.

    T is the noiseless identity unless ``channel`` gives its Kraus operators.
    """
    ops = check_povm(povm)
    if ops[0].shape[0] != ens.dim:
        raise DimensionMismatch(f"POVM dimension {ops[0].shape[0]} differs from ensemble dimension {ens.dim}")
    if channel is None:
        p = np.array([[np.real(np.conj(v) @ a @ v) for v in ens.states] for a in ops])
    else:
        received = [apply_schrodinger(channel, projector(v)) for v in ens.states]
        p = np.array([[np.real(np.trace(r @ a)) for r in received] for a in ops])
    return np.clip(p, 0.0, None)


def _entropy_of(p: np.ndarray) -> float:
    return math.fsum(eta(float(x)) for x in p.reshape(-1))


def mutual_information(ens: Ensemble, povm: Sequence, channel: Sequence | None = None) -> float:
    """I(X; Y) = H(Y) - H(Y|X) of the joint law w_i p[j, i], in nats."""
    p = channel_matrix(ens, povm, channel)
    out = p @ ens.weights
    conditional = math.fsum(w * _entropy_of(p[:, i]) for i, w in enumerate(ens.weights))
    return _entropy_of(out) - conditional


def check_holevo_bound(ens: Ensemble, povm: Sequence) -> tuple[float, float]:
    """Return (I, S(D_in)); the bound is I <= S."""
    return mutual_information(ens, povm), von_neumann(ensemble_state(ens))


def _givens(n: int, p: int, q: int, theta: float, phi: float) -> np.ndarray:
    g = np.eye(n, dtype=complex)
    c, s = math.cos(theta), math.sin(theta)
    g[p, p] = c
    g[q, q] = c
    g[p, q] = -s * np.exp(1j * phi)
    g[q, p] = s * np.exp(-1j * phi)
    return g


def _descend(ens: Ensemble, basis: np.ndarray, step: float = 0.5, min_step: float = 1e-7,
             tol: float = 1e-9) -> tuple[np.ndarray, float]:
    """Coordinate ascent on basis rotations with step halving."""
    n = basis.shape[0]
    best = mutual_information(ens, projective_povm(basis))
    moves = [(1, 0.0), (-1, 0.0), (1, math.pi / 2), (-1, math.pi / 2)]
    while step > min_step:
        gained = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                for sign, phi in moves:
                    trial = basis @ _givens(n, p, q, sign * step, phi)
                    value = mutual_information(ens, projective_povm(trial))
                    if value > best:
                        gained += value - best
                        best, basis = value, trial
        if gained < tol:
            step /= 2
    return basis, best


def optimize_measurement(ens: Ensemble, restarts: int, seed) -> tuple[list[np.ndarray], float]:
    """Best projective measurement found from seeded Haar-random bases.

    Each restart is refined by coordinate ascent over two-level rotations
    (real and imaginary) with step halving; the best of all restarts wins.
    """
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    rng = _rng(seed)
    best_basis, best_value = None, -np.inf
    for _ in range(restarts):
        basis, value = _descend(ens, random_unitary(ens.dim, rng))
        if value > best_value:
            best_basis, best_value = basis, value
    return projective_povm(best_basis), best_value
