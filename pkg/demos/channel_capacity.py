"""Information through a noiseless quantum channel is bounded by S(D)."""

import math

import numpy as np

from qentropy import capacity

zero, plus = [1, 0], [1 / math.sqrt(2), 1 / math.sqrt(2)]
ens = capacity.Ensemble([0.5, 0.5], [zero, plus])

z_basis = capacity.projective_povm(np.eye(2))
print("I with the Z measurement:", capacity.mutual_information(ens, z_basis))

povm, best = capacity.optimize_measurement(ens, restarts=4, seed=0)
_, s = capacity.check_holevo_bound(ens, povm)
print(f"best projective measurement: I = {best:.10f}  S(D) = {s:.10f}")

# Orthogonal signals can be read perfectly and reach the bound.
ortho = capacity.Ensemble([0.7, 0.3], [[1, 0], [0, 1]])
print("orthogonal signals:", capacity.check_holevo_bound(ortho, z_basis))
