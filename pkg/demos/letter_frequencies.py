"""Letter frequencies of the infinite words u_beta against the Perron eigenvector."""

import numpy as np

from betanum import ParrySystem, closed_frequencies, preset
from betanum.words import count_vector

for name in ("tau", "tau2", "tribonacci", "theta"):
    system = ParrySystem.of(preset(name))
    closed = np.array([float(x) for x in closed_frequencies(system.beta, system.expansion)])
    word = np.array(system.word().prefix(10 ** 5))
    print(name, "closed", np.round(closed, 6))
    for n in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5):
        emp = np.array(count_vector(word[:n], len(closed))) / n
        err = np.abs(emp - closed).max()
        # n * err stays bounded for Pisot bases
        print(f"   n={n:>6}  max error {err:.2e}   n*error {n * err:.3f}")
