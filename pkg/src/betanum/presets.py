"""Named bases: the quadratic Pisot units of quasicrystal physics, Tribonacci, integers."""

from __future__ import annotations

from fractions import Fraction

from betanum.exactfield import AlgebraicReal, IntPolynomial

# name -> (polynomial highest-first, isolating interval)
PRESETS: dict[str, tuple[tuple[int, ...], tuple[int, int]]] = {
    "tau": ((1, -1, -1), (1, 2)),            # golden mean
    "tau2": ((1, -3, 1), (2, 3)),            # tau^2
    "delta": ((1, -2, -1), (2, 3)),          # 1 + sqrt 2
    "theta": ((1, -4, 1), (3, 4)),           # 2 + sqrt 3
    "tribonacci": ((1, -1, -1, -1), (1, 2)),
}


def preset(name: str) -> AlgebraicReal:
    """Resolve ``tau``, ``tau2``, ``delta``, ``theta``, ``tribonacci`` or ``int:<k>``."""
    if name.startswith("int:"):
        k = int(name[4:])
        if k < 2:
            raise ValueError("integer bases must be >= 2")
        return AlgebraicReal(IntPolynomial([1, -k]), k - 1, k + 1).require_base()
    try:
        coeffs, (lo, hi) = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}") from None
    return AlgebraicReal(IntPolynomial(coeffs), lo, hi).require_base()


def parse_interval(text: str) -> tuple[Fraction, Fraction]:
    lo, hi = (Fraction(tok.strip()) for tok in text.split(","))
    return lo, hi


def from_poly(poly: str, interval: str) -> AlgebraicReal:
    lo, hi = parse_interval(interval)
    return AlgebraicReal(IntPolynomial.parse(poly), lo, hi).require_base()
