"""Subadditivity and strong subadditivity on random states."""

import numpy as np

from qentropy import entropy, states

bell = np.zeros((4, 4))
bell[0, 0] = bell[0, 3] = bell[3, 0] = bell[3, 3] = 0.5
print("Bell state (S12, S1, S2):", entropy.check_subadditivity(bell, (2, 2)))

slack = []
for seed in range(200):
    s123, s12, s23, s2 = entropy.check_ssa(states.random_density(8, seed), (2, 2, 2))
    slack.append(s12 + s23 - s123 - s2)
print(f"SSA slack over 200 random three-qubit states: min {min(slack):.3e}, mean {np.mean(slack):.3f}")
