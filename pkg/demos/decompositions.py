"""Every pure-state decomposition of D has mixing entropy at least S(D)."""

from qentropy import entropy, states

d = states.random_density(3, seed=1)
print("S(D) =", entropy.von_neumann(d))
print("Schatten:", states.mixing_entropy(states.schatten(d)))
for count in (3, 4, 6, 10):
    dec = states.random_pure_decomposition(d, count, seed=count)
    print(f"{count:2d} random pure states: mixing entropy {states.mixing_entropy(dec):.6f}")
