"""How far do beta-integers stray from the lattice c_beta Z?

Pisot bases with a minimal Parry polynomial stay within a bounded distance;
others drift away slowly.  Each sweep below is exact.
"""

import numpy as np

from betanum import ParrySystem, c_beta, drift_report, from_poly, preset
from betanum.asymptotics import drift_sequence

bases = {
    "tau": preset("tau"),
    "tau2": preset("tau2"),
    "delta": preset("delta"),
    "theta": preset("theta"),
    "tribonacci": preset("tribonacci"),
    "plastic": from_poly("1,0,-1,-1", "1,2"),      # Parry polynomial has a cyclotomic factor
    "2cos(pi/7)": from_poly("1,-1,-2,1", "1,2"),   # not Pisot
}

print(f"{'base':>12} {'d(1)':>14} {'verdict':>20} {'sup':>9} {'bound':>9}")
for name, beta in bases.items():
    system = ParrySystem.of(beta)
    report = drift_report(system, 5000)
    bound = "-" if report.predicted_bound is None else f"{report.predicted_bound:.4f}"
    print(f"{name:>12} {str(system.expansion):>14} {report.verdict.value:>20} {report.sup_drift:9.4f} {bound:>9}")

# growth of the running maximum, decade by decade
print()
for name in ("tau", "plastic", "2cos(pi/7)"):
    system = ParrySystem.of(bases[name])
    c = c_beta(system.beta, system.expansion, system.parry_poly)
    values = np.array([float(v) for _, v in drift_sequence(system, c, 30000)])
    running = np.maximum.accumulate(np.abs(values))
    marks = [10, 100, 1000, 10000, 30000]
    print(f"{name:>12}", "  ".join(f"n={m}: {running[m]:.3f}" for m in marks))
