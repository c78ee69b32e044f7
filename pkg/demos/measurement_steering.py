"""Pinchings never lower entropy, yet many of them can steer one pure state to another."""

import math

import numpy as np

from qentropy import channels, entropy

# %% One pinching in the computational basis kills the coherences.
d = np.array([[0.5, 0.3], [0.3, 0.5]])
before, after = channels.check_monotonicity(d, np.eye(2))
print(f"S before {before:.6f}  S after {after:.6f}")

# %% Rotate the measurement basis a little at a time from |0> towards |1>.
print(" k   fidelity  closed form  trace distance")
for k in (2, 3, 4, 8, 16, 64, 256):
    row = channels.steering_table([1, 0], [0, 1], k)[-1]
    print(f"{k:3d}  {row['fidelity']:.8f}  {channels.steering_fidelity_closed_form(k):.8f}"
          f"   {row['trace_distance']:.2e}  (bound {math.pi ** 2 / (4 * k):.2e})")

# %% Along the way every single step raised the entropy of the state.
path = channels.steering_sequence([1, 0], [0, 1], 8)
print("entropies along k=8:", [round(entropy.von_neumann(rho), 4) for rho in path])
