"""Maximum entropy at fixed energy is the Gibbs state."""

import math

import numpy as np

from qentropy import entropy, maxent

# %% Two levels at energies 0 and 1, mean energy 1/4.
h = np.diag([0.0, 1.0])
d, beta = maxent.max_entropy_state(h, 0.25)
print("state\n", d.real.round(12), "\nbeta =", beta, " ln 3 =", math.log(3))

# %% The classical version gives the same numbers.
law = entropy.maxwell_boltzmann([0.0, 1.0], 0.25)
print("Maxwell-Boltzmann:", law.probs, law.multiplier)

# %% At fixed beta the Gibbs state has the lowest free energy.
rng = np.random.default_rng(0)
f_gibbs = maxent.free_energy(d, h, beta)
others = [maxent.free_energy(np.diag(p), h, beta) for p in rng.dirichlet([1, 1], size=5)]
print(f"F(gibbs) = {f_gibbs:.6f}; random diagonal states:", np.round(others, 6))
