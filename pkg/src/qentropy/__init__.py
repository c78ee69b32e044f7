"""Numerical toolkit for von Neumann entropy, measurements and maximum entropy."""

__version__ = "0.1.0"

from .capacity import (
    Ensemble,
    channel_matrix,
    check_holevo_bound,
    check_povm,
    ensemble_state,
    mutual_information,
    optimize_measurement,
    projective_povm,
)
from .channels import (
    apply_heisenberg,
    apply_schrodinger,
    check_monotonicity,
    check_partition,
    pinch,
    pinch_projective,
    steering_sequence,
)
from .entropy import (
    check_mixing_law,
    check_ssa,
    check_subadditivity,
    eta,
    log_multinomial,
    maxwell_boltzmann,
    s_f,
    shannon,
    stirling_gap,
    von_neumann,
)
from .lindblad import (
    canonical_partition,
    is_state_invariant,
    lindblad_lower_bound,
    observed_entropy,
    sector_example_formula,
    sector_observed_entropy,
)
from .matrices import apply_function, eig_hermitian, kron, partial_trace, trace_distance
from .maxent import ChainSpec, build_chain, entropy_density_profile, free_energy, gibbs_state, max_entropy_state
from .states import (
    Decomposition,
    mixing_entropy,
    random_density,
    random_pure_decomposition,
    schatten,
    validate_density,
)
