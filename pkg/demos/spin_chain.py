"""Entropy density of a finite transverse-field Ising chain."""

import numpy as np

from qentropy import maxent

spec = maxent.ising_chain(8, coupling=1.0, transverse=0.5)
profile = maxent.entropy_density_profile(spec, beta=1.0, up_to=8)

for n, density in profile.densities:
    print(f"N={n}  S_N/N={density:.6f}")

worst = min(gap for _, _, gap in profile.fekete)
print("Fekete subadditivity holds:", profile.fekete_ok, " smallest slack", worst)

# Without coupling the chain is a product state and the density is flat.
free = maxent.ChainSpec(2, 8, np.diag([0.0, 1.0]), np.zeros((4, 4)))
print([round(v, 12) for _, v in maxent.entropy_density_profile(free, 1.0, 8).densities])
