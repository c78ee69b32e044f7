"""Entropy functionals and inequality checks. All values are in nats."""

import math
from typing import Callable, NamedTuple, Sequence

import numpy as np
from scipy.optimize import brentq

from .errors import (
    ConstraintOutOfRange,
    DimensionMismatch,
    DomainError,
    NoConvergence,
    NotPositive,
    SupportsNotOrthogonal,
    TraceNotOne,
)
from .matrices import eig_hermitian, partial_trace
from .states import DENSITY_TOL, RANK_CUTOFF, check_probability_vector, validate_density

ORTHOGONALITY_TOL = 1e-8
ROOT_MAXITER = 200


def eta(t: float) -> float:
    """-t log t, extended by continuity to 0 at t = 0."""
    if t < 0:
        raise DomainError(f"eta is undefined at {t}")
    if t == 0:
        return 0.0
    return -t * math.log(t)


def shannon(p: Sequence[float]) -> float:
    p = check_probability_vector(p)
    return math.fsum(eta(float(x)) for x in p)


def binary_entropy(lam: float) -> float:
    return eta(lam) + eta(1.0 - lam)


def spectrum(d) -> np.ndarray:
    """Eigenvalues of a density operator with round-off negatives clipped."""
    values = eig_hermitian(d).values
    if values[0] < -DENSITY_TOL:
        raise NotPositive(f"minimum eigenvalue {values[0]:.3e}")
    if abs(values.sum() - 1.0) > DENSITY_TOL:
        raise TraceNotOne(f"trace {values.sum():.12g} is not 1")
    return np.clip(values, 0.0, None)


def von_neumann(d) -> float:
    """S(D) = tr eta(D), evaluated on the spectrum."""
    return math.fsum(eta(float(x)) for x in spectrum(d))


def s_f(d, f: Callable[[float], float]) -> float:
    """tr f(D) for a function defined on [0, 1]."""
    out = []
    for x in spectrum(d):
        try:
            y = f(float(x))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"f undefined at eigenvalue {x}: {exc}") from exc
        if not math.isfinite(y):
            raise DomainError(f"f not finite at eigenvalue {x}")
        out.append(y)
    return math.fsum(out)


def _log_factorial(n: int) -> float:
    return math.fsum(math.log(k) for k in range(2, n + 1))


def log_multinomial(occupations: Sequence[int]) -> float:
    """log( N! / (N_1! ... N_m!) ) as a sum of logarithms."""
    occ = [int(x) for x in occupations]
    if any(x < 0 for x in occ) or sum(occ) < 1:
        raise DomainError(f"occupations must be nonnegative with N >= 1, got {occ}")
    n = sum(occ)
    return _log_factorial(n) - math.fsum(_log_factorial(x) for x in occ)


def stirling_gap(occupations: Sequence[int]) -> float:
    """|log_multinomial / N - H(N_i / N)|."""
    n = sum(int(x) for x in occupations)
    p = [x / n for x in occupations]
    return abs(log_multinomial(occupations) / n - shannon(p))


class BoltzmannLaw(NamedTuple):
    probs: np.ndarray
    multiplier: float  # lambda in p_i ~ exp(-lambda E_i)


def boltzmann_weights(levels: np.ndarray, lam: float) -> np.ndarray:
    x = -lam * levels
    w = np.exp(x - x.max())
    return w / w.sum()


def expand_bracket(g: Callable[[float], float], lo: float = -1.0, hi: float = 1.0, max_doublings: int = 64):
    """Double [lo, hi] until g changes sign; g is assumed decreasing."""
    for _ in range(max_doublings):
        glo, ghi = g(lo), g(hi)
        if glo == 0:
            return lo, lo
        if ghi == 0:
            return hi, hi
        if glo > 0 > ghi:
            return lo, hi
        if glo < 0:
            lo *= 2
        if ghi > 0:
            hi *= 2
    raise NoConvergence("could not bracket the root")


def solve_decreasing(g: Callable[[float], float]) -> float:
    lo, hi = expand_bracket(g)
    if lo == hi:
        return lo
    try:
        root, info = brentq(g, lo, hi, xtol=1e-300, rtol=4 * np.finfo(float).eps,
                            maxiter=ROOT_MAXITER, full_output=True, disp=False)
    except RuntimeError as exc:
        raise NoConvergence(str(exc)) from exc
    if not info.converged:
        raise NoConvergence(f"root finding stopped after {info.iterations} iterations")
    return root


def maxwell_boltzmann(levels: Sequence[float], e: float) -> BoltzmannLaw:
    """Maximum-entropy distribution on ``levels`` with mean energy ``e``.

    The multiplier is found by bracketed Brent iteration on
    sum_i E_i p_i(lambda) - e, which is decreasing in lambda.
    """
    lv = np.asarray(levels, dtype=float)
    if lv.size < 2 or np.any(np.diff(lv) <= 0):
        raise DomainError("levels must be strictly increasing with at least two entries")
    if not lv[0] < e < lv[-1]:
        raise ConstraintOutOfRange(f"energy {e} is outside ({lv[0]}, {lv[-1]})")

    def residual(lam):
        return float(boltzmann_weights(lv, lam) @ lv) - e

    lam = solve_decreasing(residual)
    p = boltzmann_weights(lv, lam)
    if abs(p @ lv - e) > 1e-10:
        raise NoConvergence(f"energy residual {abs(p @ lv - e):.3e} above 1e-10")
    return BoltzmannLaw(p, lam)


def range_projection(d, cutoff: float = RANK_CUTOFF) -> np.ndarray:
    values, vectors = eig_hermitian(d)
    v = vectors[:, values > cutoff]
    return v @ np.conj(v).T


def check_mixing_law(d1, d2, lam: float) -> float:
    """Gap in S(l d1 + (1-l) d2) = l S(d1) + (1-l) S(d2) + h(l) for orthogonal supports."""
    d1 = validate_density(d1)
    d2 = validate_density(d2)
    if d1.shape != d2.shape:
        raise DimensionMismatch(f"shapes {d1.shape} and {d2.shape} differ")
    if not 0 < lam < 1:
        raise DomainError(f"lambda must lie in (0, 1), got {lam}")
    overlap = np.linalg.norm(range_projection(d1) @ range_projection(d2), 2)
    if overlap > ORTHOGONALITY_TOL:
        raise SupportsNotOrthogonal(f"range projections overlap with norm {overlap:.3e}")
    mix = lam * d1 + (1 - lam) * d2
    return abs(von_neumann(mix) - lam * von_neumann(d1) - (1 - lam) * von_neumann(d2)
               - binary_entropy(lam))


def check_subadditivity(d12, dims: tuple[int, int]) -> tuple[float, float, float]:
    """Return (S(D12), S(D1), S(D2)); subadditivity means S12 <= S1 + S2."""
    d12 = validate_density(d12)
    a, b = dims
    if d12.shape[0] != a * b:
        raise DimensionMismatch(f"dims {dims} do not factor dimension {d12.shape[0]}")
    d1 = partial_trace(d12, dims, "first")
    d2 = partial_trace(d12, dims, "second")
    return von_neumann(d12), von_neumann(d1), von_neumann(d2)


def check_ssa(d123, dims: tuple[int, int, int]) -> tuple[float, float, float, float]:
    """Return (S123, S12, S23, S2); strong subadditivity is S123 + S2 <= S12 + S23."""
    d123 = validate_density(d123)
    a, b, c = dims
    if d123.shape[0] != a * b * c:
        raise DimensionMismatch(f"dims {dims} do not factor dimension {d123.shape[0]}")
    d12 = partial_trace(d123, (a * b, c), "first")
    d23 = partial_trace(d123, (a, b * c), "second")
    d2 = partial_trace(d12, (a, b), "second")
    return von_neumann(d123), von_neumann(d12), von_neumann(d23), von_neumann(d2)
