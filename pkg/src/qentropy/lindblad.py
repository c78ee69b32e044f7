"""Operational (Lindblad) entropy of states.

The observed entropy of a partition (V_1, ..., V_n) in state D is the von
Neumann entropy of the n x n matrix [tr(D V_i^dagger V_j)]. The operational
entropy is its supremum over state-invariant partitions; here it is only
bounded from below by an explicit family that contains the canonical
witness V_kl = sqrt(l_k) |psi_k><psi_l| reaching 2 S(D).
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channels import apply_schrodinger, check_partition
from .entropy import eta, shannon, von_neumann
from .errors import DimensionMismatch, MatrixNotPsd, NotAPartition, NotAProbabilityTriple, RankDeficient, SectorViolation
from .matrices import dagger, eig_hermitian
from .states import RANK_CUTOFF, _rng, random_isometry, random_unitary, validate_density

OBSERVED_TOL = 1e-8
INVARIANCE_TOL = 1e-8
SECTOR_TOL = 1e-10


def observed_matrix(kraus: Sequence, d) -> np.ndarray:
    """[tr(D V_i^dagger V_j)]_{ij}, checked to be PSD with unit trace."""
    ops = check_partition(kraus)
    d = validate_density(d)
    if d.shape != ops[0].shape:
        raise DimensionMismatch(f"state of dimension {d.shape[0]} with partition of dimension {ops[0].shape[0]}")
    dv = [d @ dagger(v) for v in ops]
    m = np.array([[np.trace(dvi @ vj) for vj in ops] for dvi in dv])
    herm = np.max(np.abs(m - dagger(m)))
    m = (m + dagger(m)) / 2
    low = eig_hermitian(m).values[0]
    tr = np.trace(m).real
    if herm > OBSERVED_TOL or low < -OBSERVED_TOL or abs(tr - 1) > OBSERVED_TOL:
        raise MatrixNotPsd(f"observed matrix invalid: hermitian gap {herm:.2e}, "
                           f"min eigenvalue {low:.2e}, trace {tr:.12g}")
    return m / tr


def observed_entropy(kraus: Sequence, d) -> float:
    return von_neumann(observed_matrix(kraus, d))


def is_state_invariant(kraus: Sequence, d, tol: float = INVARIANCE_TOL) -> bool:
    d = validate_density(d)
    out = apply_schrodinger(kraus, d)
    return bool(np.max(np.abs(out - d)) <= tol)


def canonical_partition(d, allow_support: bool = True) -> list[np.ndarray]:
    """V_kl = sqrt(l_k) |psi_k><psi_l| over the eigensystem of D.

    For rank-deficient D the family is built on the support and completed
    by the projection onto the kernel, which keeps sum V*V = I and leaves
    the observed entropy unchanged (that element has zero weight).
    Pass ``allow_support=False`` to get RankDeficient instead.
    """
    d = validate_density(d)
    values, vectors = eig_hermitian(d)
    support = values > RANK_CUTOFF
    if not np.all(support) and not allow_support:
        raise RankDeficient(f"state has rank {support.sum()} < {d.shape[0]}")
    lam = values[support] / values[support].sum()
    psi = vectors[:, support]
    ops = [np.sqrt(lam[k]) * np.outer(psi[:, k], np.conj(psi[:, l]))
           for k in range(psi.shape[1]) for l in range(psi.shape[1])]
    if not np.all(support):
        ker = vectors[:, ~support]
        ops.append(ker @ dagger(ker))
    return ops


def eigenbasis_pinching(d) -> list[np.ndarray]:
    vectors = eig_hermitian(validate_density(d)).vectors
    return [np.outer(vectors[:, i], np.conj(vectors[:, i])) for i in range(vectors.shape[1])]


def _commuting_unitary(values: np.ndarray, vectors: np.ndarray, rng, tol: float = 1e-10) -> np.ndarray:
    """Random unitary, block-diagonal on the eigenspaces of D."""
    n = values.size
    u = np.zeros((n, n), dtype=complex)
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and values[stop] - values[stop - 1] <= tol:
            stop += 1
        size = stop - start
        u[start:stop, start:stop] = random_unitary(size, rng)
        start = stop
    return vectors @ u @ dagger(vectors)


def random_invariant_partition(d, rng) -> list[np.ndarray]:
    """A random state-invariant partition built from structured pieces.

    Three families are each state invariant for D: the canonical family
    conjugated by a unitary commuting with D and then linearly remixed by a
    Haar isometry; a random-unitary family {sqrt(p_m) U_m} with each U_m
    commuting with D; and the eigenbasis pinching. A random convex
    combination sqrt(t_a) * family_a of them is again a state-invariant
    partition.
    """
    d = validate_density(d)
    values, vectors = eig_hermitian(d)

    q = _commuting_unitary(values, vectors, rng)
    canon = [q @ v @ dagger(q) for v in canonical_partition(d)]
    n_out = len(canon) + int(rng.integers(0, 3))
    mix = random_isometry(n_out, len(canon), rng)
    canon = [sum(mix[j, a] * canon[a] for a in range(len(canon))) for j in range(n_out)]

    count = int(rng.integers(1, 5))
    p = rng.dirichlet(np.ones(count))
    unitaries = [np.sqrt(pm) * _commuting_unitary(values, vectors, rng) for pm in p]

    pinching = eigenbasis_pinching(d)

    t = rng.dirichlet(np.ones(3) * 0.5)
    family = []
    for weight, ops in zip(t, (canon, unitaries, pinching)):
        if weight > 1e-12:
            family.extend(np.sqrt(weight) * v for v in ops)
    return family


@dataclass
class LindbladSurvey:
    lower_bound: float
    two_s: float
    canonical_value: float
    pinching_value: float
    samples: list  # observed entropies of kept random partitions
    discarded: int

    @property
    def samples_kept(self) -> int:
        return len(self.samples)


def lindblad_survey(d, trials: int, seed) -> LindbladSurvey:
    """Observed entropies over the canonical witness, the eigenbasis
    pinching and ``trials`` seeded random invariant partitions. Samples that
    fail the partition or invariance re-check are discarded."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    d = validate_density(d)
    rng = _rng(seed)
    canonical_value = observed_entropy(canonical_partition(d), d)
    pinching_value = observed_entropy(eigenbasis_pinching(d), d)
    samples, discarded = [], 0
    for _ in range(trials):
        w = random_invariant_partition(d, rng)
        try:
            check_partition(w)
            if not is_state_invariant(w, d):
                discarded += 1
                continue
            samples.append(observed_entropy(w, d))
        except (NotAPartition, MatrixNotPsd):
            discarded += 1
    best = max([canonical_value, pinching_value, *samples])
    return LindbladSurvey(best, 2 * von_neumann(d), canonical_value, pinching_value, samples, discarded)


def lindblad_lower_bound(d, trials: int, seed) -> float:
    return lindblad_survey(d, trials, seed).lower_bound


def sector_example_formula(l1: float, l2: float, l3: float) -> float:
    """-2 sum l_i log l_i - (l1+l2) log(l1+l2) - (l1+l2+l3) log(l1+l2+l3).

    Evaluated term by term; the last term vanishes for normalized weights.
    """
    lam = [float(l1), float(l2), float(l3)]
    if any(x < 0 for x in lam) or abs(sum(lam) - 1) > 1e-12:
        raise NotAProbabilityTriple(f"weights {lam} are not a probability triple")
    return 2 * math.fsum(eta(x) for x in lam) + eta(l1 + l2) + eta(l1 + l2 + l3)


def check_sector_blocks(m, block_dims: Sequence[int], tol: float = SECTOR_TOL) -> None:
    m = np.asarray(m)
    edges = np.cumsum([0, *block_dims])
    if edges[-1] != m.shape[0]:
        raise DimensionMismatch(f"sectors {tuple(block_dims)} do not cover dimension {m.shape[0]}")
    mask = np.ones(m.shape, dtype=bool)
    for a, b in zip(edges[:-1], edges[1:]):
        mask[a:b, a:b] = False
    leak = float(np.max(np.abs(m[mask]), initial=0.0))
    if leak > tol:
        raise SectorViolation(f"cross-sector matrix element of size {leak:.3e}")


def sector_observed_entropy(kraus: Sequence, d, block_dims: Sequence[int]) -> float:
    """observed_entropy for a block-diagonal state and sector-respecting partition."""
    ops = check_partition(kraus)
    check_sector_blocks(d, block_dims)
    for v in ops:
        check_sector_blocks(v, block_dims)
    return observed_entropy(ops, d)


def blockwise_canonical_partition(d, block_dims: Sequence[int]) -> list[np.ndarray]:
    """Canonical partitions of each sector's normalized state, embedded block-diagonally."""
    d = validate_density(d)
    check_sector_blocks(d, block_dims)
    n = d.shape[0]
    edges = np.cumsum([0, *block_dims])
    ops = []
    for a, b in zip(edges[:-1], edges[1:]):
        block = d[a:b, a:b]
        weight = np.trace(block).real
        if weight <= RANK_CUTOFF:
            piece = [np.eye(b - a, dtype=complex)]
        else:
            piece = canonical_partition(block / weight)
        for v in piece:
            full = np.zeros((n, n), dtype=complex)
            full[a:b, a:b] = v
            ops.append(full)
    return ops


def sector_state(weights: Sequence[float], block_dims: Sequence[int] = (2, 3)) -> np.ndarray:
    """tau_0: weights on |psi_1>, |psi_2> in sector one and |psi_3> in sector two.

    The psi_i are taken as the first two basis vectors of the first sector
    and the first basis vector of the second.
    """
    l1, l2, l3 = weights
    n = sum(block_dims)
    diag = np.zeros(n)
    diag[0], diag[1], diag[block_dims[0]] = l1, l2, l3
    return np.diag(diag).astype(complex)


def blockwise_value(weights: Sequence[float]) -> float:
    """H(sector weights) + sum_b w_b * 2 S(normalized block) for tau_0."""
    l1, l2, l3 = weights
    mu = l1 + l2
    inner = shannon([l1 / mu, l2 / mu]) if mu > 0 else 0.0
    return shannon([mu, l3]) + mu * 2 * inner
