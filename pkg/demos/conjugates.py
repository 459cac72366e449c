"""Rebuilding b_n - c n from the Galois conjugates of beta.

The drift is computed exactly in Q(beta); the same number can be recovered
from the digits of n evaluated at the conjugate roots.
"""

import mpmath

from betanum import ParrySystem, c_beta, conjugate_roots, drift, drift_bound, drift_via_conjugates, preset
from betanum.asymptotics import CONJUGATE_SUM_SIGN, calibrate_conjugate_sign

system = ParrySystem.of(preset("tribonacci"))
c = c_beta(system.beta, system.expansion, system.parry_poly)
roots = conjugate_roots(system.parry_poly, system.beta)

print("Parry polynomial", system.parry_poly)
for z, r in zip(roots.roots, roots.radii):
    print("  conjugate", mpmath.nstr(z, 15), " |z| =", mpmath.nstr(abs(z), 10), " radius", mpmath.nstr(r, 3))

# the overall sign of the conjugate sum is checked against the direct drift
print("sign convention:", calibrate_conjugate_sign(system, c, roots), "(shipped:", CONJUGATE_SUM_SIGN, ")")

for n in (1, 2, 7, 44, 81, 149, 1000):
    exact = drift(system, n, c)
    via = drift_via_conjugates(n, system.digits_of(n), roots, c, system.expansion)
    print(f"n={n:5d} digits {str(system.digits_of(n)):>12}  exact {exact.to_decimal(15):>19}  via roots {mpmath.nstr(via, 15):>19}")

print("explicit bound on |b_n - c n|:", mpmath.nstr(drift_bound(c, system.beta.to_mpf(128), roots), 8))
