"""The operational entropy is twice the von Neumann entropy."""

import numpy as np

from qentropy import entropy, lindblad, states

d = states.random_density(3, seed=4)
survey = lindblad.lindblad_survey(d, trials=200, seed=4)
print("2 S(D)              ", 2 * entropy.von_neumann(d))
print("canonical partition ", survey.canonical_value)
print("eigenbasis pinching ", survey.pinching_value)
print(f"random invariant partitions: {survey.samples_kept} kept, best {max(survey.samples):.6f}")

# With superselection sectors M2 + M3 the block-wise witness is smaller.
weights = (0.5, 0.25, 0.25)
tau = lindblad.sector_state(weights)
w = lindblad.blockwise_canonical_partition(tau, (2, 3))
print("sector-respecting value", lindblad.sector_observed_entropy(w, tau, (2, 3)))
print("sector formula         ", lindblad.sector_example_formula(*weights))
print("2 S(tau)               ", 2 * entropy.von_neumann(tau))
