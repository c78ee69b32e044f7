"""Von Neumann entropy, Shannon entropy and the counting argument behind them."""

import math

import numpy as np

from qentropy import entropy, states

# %% A pure state has zero entropy, the maximally mixed qubit has ln 2.
plus = states.pure_state(np.array([1, 1]) / math.sqrt(2))
print("S(|+><+|)  =", entropy.von_neumann(np.outer(plus, plus.conj())))
print("S(I/2)     =", entropy.von_neumann(np.eye(2) / 2))

# %% The mixture of |0> and |+> is not diagonal, but its entropy is the
# Shannon entropy of its eigenvalues.
d = 0.5 * np.diag([1.0, 0.0]) + 0.5 * np.full((2, 2), 0.5)
print("D =\n", d)
print("eigenvalues", np.linalg.eigvalsh(d), " S(D) =", entropy.von_neumann(d))

# %% Counting: (1/N) log of the multinomial coefficient approaches H(p).
p = [0.5, 0.25, 0.25]
for n in (4, 16, 64, 256, 1024):
    occ = [int(n * x) for x in p]
    print(f"N={n:5d}  log-count/N={entropy.log_multinomial(occ) / n:.6f}  "
          f"H={entropy.shannon(p):.6f}  gap={entropy.stirling_gap(occ):.6f}")
