"""Gibbs states, constrained entropy maximization and finite spin chains."""

from dataclasses import dataclass, field, replace

import numpy as np

from .entropy import solve_decreasing, von_neumann
from .errors import ConstraintOutOfRange, DimensionMismatch, DimensionOverflow, DomainError, NoConvergence
from .matrices import MAX_DIM, check_hermitian, dagger, eig_hermitian, kron_all, partial_trace

ENERGY_TOL = 1e-10


def energy(d, h) -> float:
    return float(np.real(np.trace(np.asarray(d) @ np.asarray(h))))


def _gibbs_from_eig(values, vectors, beta: float) -> np.ndarray:
    x = -beta * values
    w = np.exp(x - x.max())
    w /= w.sum()
    return (vectors * w) @ dagger(vectors)


def gibbs_state(h, beta: float) -> np.ndarray:
    """exp(-beta H) / tr exp(-beta H), via the spectrum with a max shift."""
    if not np.isfinite(beta):
        raise DomainError(f"beta must be finite, got {beta}")
    values, vectors = eig_hermitian(check_hermitian(h))
    return _gibbs_from_eig(values, vectors, beta)


def max_entropy_state(h, e: float) -> tuple[np.ndarray, float]:
    """Maximize S(D) subject to tr(DH) = e.

    Returns the Gibbs state and its inverse temperature. The energy
    tr(D_beta H) is decreasing in beta, so beta is found by bracketing from
    [-1, 1] outward and Brent iteration.
    """
    values, vectors = eig_hermitian(check_hermitian(h))
    if not values[0] < e < values[-1]:
        raise ConstraintOutOfRange(f"energy {e} is outside ({values[0]}, {values[-1]})")

    def residual(beta):
        x = -beta * values
        w = np.exp(x - x.max())
        return float(w @ values / w.sum()) - e

    beta = solve_decreasing(residual)
    d = _gibbs_from_eig(values, vectors, beta)
    gap = abs(energy(d, h) - e)
    if gap > ENERGY_TOL:
        raise NoConvergence(f"energy residual {gap:.3e} above {ENERGY_TOL:.0e}")
    return d, beta


def free_energy(d, h, beta: float) -> float:
    """tr(DH) - S(D) / beta. The Gibbs state is its minimizer."""
    if not beta > 0:
        raise DomainError(f"beta must be positive, got {beta}")
    return energy(d, h) - von_neumann(d) / beta


@dataclass(frozen=True)
class ChainSpec:
    site_dim: int
    length: int
    site_term: np.ndarray = field(repr=False)
    coupling_term: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.site_dim < 2 or self.length < 1:
            raise DimensionMismatch("site_dim must be >= 2 and length >= 1")
        site = check_hermitian(self.site_term)
        coupling = check_hermitian(self.coupling_term)
        if site.shape[0] != self.site_dim or coupling.shape[0] != self.site_dim ** 2:
            raise DimensionMismatch("site or coupling term has the wrong dimension")
        if self.site_dim ** self.length > MAX_DIM:
            raise DimensionOverflow(f"chain dimension {self.site_dim}^{self.length} exceeds {MAX_DIM}")
        object.__setattr__(self, "site_term", site)
        object.__setattr__(self, "coupling_term", coupling)

    @property
    def dim(self) -> int:
        return self.site_dim ** self.length


def build_chain(spec: ChainSpec) -> np.ndarray:
    """Open-boundary chain Hamiltonian sum_n h_n + sum_n h_{n,n+1}."""
    eye = np.eye(spec.site_dim, dtype=complex)
    h = np.zeros((spec.dim, spec.dim), dtype=complex)
    for n in range(spec.length):
        h += kron_all([eye] * n + [spec.site_term] + [eye] * (spec.length - n - 1))
    for n in range(spec.length - 1):
        h += kron_all([eye] * n + [spec.coupling_term] + [eye] * (spec.length - n - 2))
    return h


@dataclass
class EntropyProfile:
    beta: float
    entropies: dict  # N -> S(first N sites)
    fekete: list  # (m, n, S_m + S_n - S_{m+n})

    @property
    def densities(self) -> list[tuple[int, float]]:
        return [(n, s / n) for n, s in sorted(self.entropies.items())]

    @property
    def fekete_ok(self) -> bool:
        return all(gap >= -1e-8 for _, _, gap in self.fekete)


def entropy_density_profile(spec: ChainSpec, beta: float, up_to: int) -> EntropyProfile:
    """S_N / N for the first-N-site marginals of the length-``up_to`` Gibbs chain.

    Also records the Fekete gaps S_m + S_n - S_{m+n} for all m + n <= up_to.
    """
    if up_to < 1:
        raise DomainError("up_to must be at least 1")
    chain = replace(spec, length=up_to)
    rho = gibbs_state(build_chain(chain), beta)
    q = spec.site_dim
    entropies = {}
    for n in range(1, up_to + 1):
        marginal = partial_trace(rho, (q ** n, q ** (up_to - n)), "first")
        entropies[n] = von_neumann(marginal)
    fekete = [(m, n, entropies[m] + entropies[n] - entropies[m + n])
              for m in range(1, up_to) for n in range(1, up_to - m + 1)]
    return EntropyProfile(beta, entropies, fekete)


def ising_chain(length: int, coupling: float = 1.0, transverse: float = 0.0) -> ChainSpec:
    """Transverse-field Ising chain -J Z Z - g X as a ChainSpec."""
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.diag([1.0, -1.0]).astype(complex)
    return ChainSpec(2, length, -transverse * x, -coupling * np.kron(z, z))
