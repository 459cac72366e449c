"""The density constant c_beta = lim b_n / n and the drift b_n - c_beta n.

Everything that decides a drift value is exact in Q(beta).  Conjugate roots
are numeric (mpmath) and only feed the conjugate-sum reconstruction of the
drift, the explicit drift bound, and the Pisot test.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import mpmath

from betanum.betaint import ParrySystem, UExpansion
from betanum.errors import (
    NonInvertibleDivisor,
    NonRealResult,
    NotPisot,
    NotQuadratic,
    NotSquarefree,
    PrecisionNotReached,
    RepeatedRoots,
    UndeterminedInput,
)
from betanum.exactfield import AlgebraicReal, FieldElement, IntPolynomial, _poly_gcd
from betanum.renyi import RenyiExpansion, Status

# Global sign of the conjugate-sum identity
#   b_n / c - n = SIGN * sum_j z_j g(beta_j) / p'(beta_j),
# fixed against the directly computed drift (see calibrate_conjugate_sign).
CONJUGATE_SUM_SIGN = -1


def default_precision_bits() -> int:
    return int(os.environ.get("BETANUM_PRECISION_BITS", "128"))


def fixed_decimal(value, digits: int = 12) -> str:
    """Fixed-point decimal of a FieldElement or an mpf, rounded half-even."""
    if isinstance(value, FieldElement):
        return value.to_decimal(digits)
    man, exp = mpmath.mpf(value).man_exp if value else (0, 0)
    q = Fraction(man) * Fraction(2) ** exp
    scaled = round(abs(q) * 10 ** digits)
    sign = "-" if q < 0 and scaled else ""
    whole, part = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{part:0{digits}d}"


# ---------------------------------------------------------------------------
# c_beta

@dataclass
class AsymptoticConstants:
    c_beta_exact: Optional[FieldElement]
    c_beta_numeric: mpmath.mpf
    l: int
    L: int
    p_prime_at_beta: FieldElement
    numerator: FieldElement
    denominator: FieldElement

    @property
    def exact(self) -> bool:
        return self.c_beta_exact is not None

    def decimal(self, digits: int = 12) -> str:
        if self.c_beta_exact is not None:
            return self.c_beta_exact.to_decimal(digits)
        return fixed_decimal(self.c_beta_numeric, digits)


def c_beta(
    beta: AlgebraicReal,
    d: RenyiExpansion,
    parry_poly: IntPolynomial | None = None,
    prec: int | None = None,
) -> AsymptoticConstants:
    """c_beta = (beta - 1) p'(beta) / (beta^l (beta^L - 1)), l, L the lengths of d*(1)."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    if parry_poly is None:
        from betanum.renyi import parry_polynomial
        parry_poly = parry_polynomial(d)
    prec = prec or default_precision_bits()
    l, L = d.unified_lengths
    b = beta.gen()
    dp = parry_poly.derivative()
    p_prime = dp.at(beta) if isinstance(dp, IntPolynomial) else beta.one() * dp
    numerator = (b - 1) * p_prime
    denominator = b ** l * (b ** L - 1)
    try:
        exact = numerator / denominator
    except NonInvertibleDivisor:
        exact = None
    if exact is not None:
        numeric = exact.to_mpf(prec)
    else:
        with mpmath.workprec(prec):
            numeric = numerator.to_mpf(prec) / denominator.to_mpf(prec)
    return AsymptoticConstants(exact, numeric, l, L, p_prime, numerator, denominator)


# ---------------------------------------------------------------------------
# conjugate roots

@dataclass
class ConjugateSet:
    """Roots of ``poly`` other than the distinguished real root beta."""

    poly: IntPolynomial
    beta_root: mpmath.mpc
    roots: list
    radii: list
    residual_bound: mpmath.mpf
    distinct: bool
    prec: int

    def __len__(self):
        return len(self.roots)

    def moduli(self) -> list:
        return [abs(z) for z in self.roots]


def _poly_and_derivative(low: Sequence[int], z):
    p = mpmath.mpc(0)
    dp = mpmath.mpc(0)
    for c in reversed(low):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(low: Sequence[int], max_iter: int) -> list:
    n = len(low) - 1
    center = mpmath.mpf(-low[n - 1]) / n
    radius = 1 + max(abs(mpmath.mpf(c)) for c in low[:-1])
    z = [center + radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4")) for k in range(n)]
    eps = mpmath.eps * 16
    for _ in range(max_iter):
        biggest = mpmath.mpf(0)
        for k in range(n):
            p, dp = _poly_and_derivative(low, z[k])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else mpmath.mpc(eps)
            s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k)
            w = ratio / (1 - ratio * s)
            z[k] -= w
            biggest = max(biggest, abs(w) / max(1, abs(z[k])))
        if biggest < eps:
            break
    return z


def conjugate_roots(
    p: IntPolynomial,
    beta: AlgebraicReal,
    precision=mpmath.mpf("1e-30"),
    bits: int | None = None,
    max_iter: int = 500,
) -> ConjugateSet:
    """All complex roots of p except beta, by Aberth–Ehrlich simultaneous iteration.

    Each root carries an inclusion radius n|p(z)| / |prod (z - z_j)|; the roots
    are flagged distinct when those disks are pairwise disjoint.
    """
    if not p.is_squarefree():
        raise NotSquarefree(f"{p} has a repeated factor")
    bits = bits or default_precision_bits()
    low = p.low
    n = p.degree
    with mpmath.workprec(bits):
        tol = mpmath.mpf(precision)
        if n == 1:
            z = [mpmath.mpc(-low[0])]
        else:
            z = _aberth(low, max_iter)
        residuals = [abs(_poly_and_derivative(low, zk)[0]) for zk in z]
        worst = max(residuals)
        if worst > tol:
            raise PrecisionNotReached(f"residual {mpmath.nstr(worst, 5)} above {mpmath.nstr(tol, 5)}")
        radii = []
        for k in range(n):
            denom = mpmath.mpf(1)
            for j in range(n):
                if j != k:
                    denom *= abs(z[k] - z[j])
            radii.append(n * residuals[k] / denom if denom else mpmath.inf)
        distinct = all(
            abs(z[i] - z[j]) > radii[i] + radii[j] for i in range(n) for j in range(i + 1, n)
        )
        target = beta.to_mpf(bits)
        k_beta = min(range(n), key=lambda k: abs(z[k] - target))
        beta_root = z[k_beta]
        others = [z[k] for k in range(n) if k != k_beta]
        other_radii = [radii[k] for k in range(n) if k != k_beta]
    return ConjugateSet(p, beta_root, others, other_radii, worst, distinct, bits)


class PisotVerdict(enum.Enum):
    PISOT = "pisot"
    NOT_PISOT = "not_pisot"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class PisotTest:
    verdict: PisotVerdict
    margin: float

    def __bool__(self):
        return self.verdict is PisotVerdict.PISOT


def is_pisot(p: IntPolynomial, roots: ConjugateSet) -> PisotTest:
    """Every conjugate strictly inside the unit disk, with a certified margin."""
    if not roots.roots:
        return PisotTest(PisotVerdict.PISOT, 1.0)
    with mpmath.workprec(roots.prec):
        upper = [abs(z) + r for z, r in zip(roots.roots, roots.radii)]
        lower = [abs(z) - r for z, r in zip(roots.roots, roots.radii)]
        margin = float(1 - max(upper))
        if all(u < 1 for u in upper):
            return PisotTest(PisotVerdict.PISOT, margin)
        if any(lo > 1 for lo in lower):
            return PisotTest(PisotVerdict.NOT_PISOT, margin)
    return PisotTest(PisotVerdict.UNKNOWN, margin)


class Boundedness(str, enum.Enum):
    BOUNDED = "Bounded"
    UNBOUNDED_PREDICTED = "UnboundedPredicted"
    UNKNOWN = "Unknown"


def root_of_unity_order(p: IntPolynomial) -> Optional[int]:
    """Smallest k with gcd(p, x^k - 1) nonconstant, i.e. p has a root on the unit circle exactly."""
    # phi(k) <= deg p forces k <= 2 deg^2
    for k in range(1, 2 * p.degree ** 2 + 1):
        if len(_poly_gcd(p.low, [-1] + [0] * (k - 1) + [1])) > 1:
            return k
    return None


def boundedness_predicted(
    d: RenyiExpansion,
    p: IntPolynomial,
    defining: IntPolynomial,
    roots: ConjugateSet,
) -> Boundedness:
    """Drift is bounded iff beta is Pisot and its Parry polynomial is minimal.

    Minimality is proxied by equality with the defining polynomial.  A root of
    modulus > 1 (certified by its inclusion disk) or a cyclotomic factor of p
    predicts unbounded drift.
    """
    with mpmath.workprec(roots.prec):
        if any(abs(z) - r > 1 for z, r in zip(roots.roots, roots.radii)):
            return Boundedness.UNBOUNDED_PREDICTED
    if root_of_unity_order(p) is not None:
        return Boundedness.UNBOUNDED_PREDICTED
    if p == defining and roots.distinct and is_pisot(p, roots):
        return Boundedness.BOUNDED
    return Boundedness.UNKNOWN


def c_beta_product(beta_numeric, roots: ConjugateSet, l: int, L: int):
    """(beta - 1) / (beta^l (beta^L - 1)) * prod_j (beta - beta_j)."""
    if not roots.distinct:
        raise RepeatedRoots("product form needs mutually distinct roots")
    with mpmath.workprec(roots.prec):
        beta_numeric = mpmath.mpf(beta_numeric)
        prod = mpmath.mpc(1)
        for z in roots.roots:
            prod *= beta_numeric - z
        value = (beta_numeric - 1) / (beta_numeric ** l * (beta_numeric ** L - 1)) * prod
        return value.real


# ---------------------------------------------------------------------------
# drift

def drift(system: ParrySystem, n: int, constants: AsymptoticConstants):
    """b_n - c_beta n: exact FieldElement, or an mpf when c_beta had no exact form."""
    b = system.b(n)
    if constants.c_beta_exact is not None:
        return b - constants.c_beta_exact * n
    bits = default_precision_bits()
    with mpmath.workprec(bits):
        return b.to_mpf(bits) - constants.c_beta_numeric * n


def drift_sequence(system: ParrySystem, constants: AsymptoticConstants, n_max: int) -> Iterator:
    """Yields ``(n, drift_n)`` for n = 0 … n_max from one exact sweep of the stream."""
    exact = constants.c_beta_exact
    bits = default_precision_bits()
    cn = system.beta.zero()
    for n, b, _ in system.stream():
        if n > n_max:
            return
        if exact is not None:
            yield n, b - cn
            cn = cn + exact
        else:
            with mpmath.workprec(bits):
                yield n, b.to_mpf(bits) - constants.c_beta_numeric * n


def _geometric(z, count: int):
    acc = mpmath.mpc(0)
    for _ in range(count):
        acc = acc * z + 1
    return acc


def conjugate_sum(digits: UExpansion, roots: ConjugateSet, d: RenyiExpansion):
    """sum_j z_j g(beta_j) / p'(beta_j), complex, without sign or c_beta factor.

    z_j = sum a_i beta_j^i and g(x) = (x^m - 1)/(x - 1) for finite d(1),
    x^m (x^p - 1)/(x - 1) otherwise.
    """
    if not roots.distinct:
        raise RepeatedRoots("conjugate-sum formula needs mutually distinct roots")
    dp_low = roots.poly.derivative_low()
    m, p = d.m, d.p
    total = mpmath.mpc(0)
    with mpmath.workprec(roots.prec):
        for bj in roots.roots:
            z = mpmath.mpc(0)
            for a in digits.digits:
                z = z * bj + a
            deriv = mpmath.mpc(0)
            for c in reversed(dp_low):
                deriv = deriv * bj + c
            if d.status is Status.FINITE:
                g = _geometric(bj, m)
            else:
                g = bj ** m * _geometric(bj, p)
            total += z * g / deriv
    return total


def drift_via_conjugates(
    n: int,
    digits: UExpansion,
    roots: ConjugateSet,
    constants: AsymptoticConstants,
    d: RenyiExpansion,
    sign: int = CONJUGATE_SUM_SIGN,
    tolerance=mpmath.mpf("1e-20"),
):
    """b_n - c_beta n rebuilt from the conjugates of beta and the digits of n."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    with mpmath.workprec(roots.prec):
        value = sign * constants.c_beta_numeric * conjugate_sum(digits, roots, d)
        if abs(value.imag) > tolerance:
            raise NonRealResult(f"imaginary residue {mpmath.nstr(value.imag, 5)} at n={n}")
        return value.real


def calibrate_conjugate_sign(
    system: ParrySystem,
    constants: AsymptoticConstants,
    roots: ConjugateSet,
    n_max: int = 64,
) -> int:
    """Sign s making ``s * c * conjugate_sum`` equal the direct drift."""
    bits = roots.prec
    for n in range(1, n_max + 1):
        direct = drift(system, n, constants)
        direct = direct.to_mpf(bits) if isinstance(direct, FieldElement) else direct
        if abs(direct) < mpmath.mpf("1e-6"):
            continue
        with mpmath.workprec(bits):
            raw = (constants.c_beta_numeric * conjugate_sum(system.digits_of(n), roots, system.expansion)).real
        return 1 if (raw > 0) == (direct > 0) else -1
    return CONJUGATE_SUM_SIGN


def drift_bound(constants: AsymptoticConstants, beta_numeric, roots: ConjugateSet):
    """2 c_beta beta sum_j 1 / ((1 - |beta_j|)^2 |p'(beta_j)|), summed over every conjugate."""
    if not roots.distinct:
        raise RepeatedRoots("drift bound needs mutually distinct roots")
    if not is_pisot(roots.poly, roots):
        raise NotPisot("drift bound needs every conjugate inside the unit disk")
    dp_low = roots.poly.derivative_low()
    with mpmath.workprec(roots.prec):
        total = mpmath.mpf(0)
        for bj in roots.roots:
            deriv = mpmath.mpc(0)
            for c in reversed(dp_low):
                deriv = deriv * bj + c
            total += 1 / ((1 - abs(bj)) ** 2 * abs(deriv))
        return 2 * constants.c_beta_numeric * mpmath.mpf(beta_numeric) * total


# ---------------------------------------------------------------------------
# quadratic units

class QuadraticUnitKind(str, enum.Enum):
    SIMPLE = "SimpleUnit"
    NON_SIMPLE = "NonSimpleUnit"


def quadratic_unit_formula(beta: AlgebraicReal, n: int, kind: QuadraticUnitKind) -> FieldElement:
    """Closed form of b_n for a quadratic Parry unit, using exact fractional parts."""
    if beta.degree != 2:
        raise NotQuadratic(f"{beta.f} is not quadratic")
    b = beta.gen()
    if QuadraticUnitKind(kind) is QuadraticUnitKind.SIMPLE:
        c = (1 + b * b) / (b * (1 + b))
        return c * n + (1 - b) / (b * (1 + b)) + (b - 1) / b * ((n + 1) / (1 + b)).frac()
    c = 1 - 1 / (b * b)
    return c * n + (n / b).frac() / b


# ---------------------------------------------------------------------------
# drift report

@dataclass
class DriftReport:
    n_max: int
    sup_drift: float
    arg_max: int
    predicted_bound: Optional[float]
    pisot: Optional[bool]
    minimal_poly_flag: str
    verdict: Boundedness
    max_drift: object = field(default=None, repr=False)
    min_drift: object = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "sup_drift": round(self.sup_drift, 12),
            "arg_max": self.arg_max,
            "predicted_bound": None if self.predicted_bound is None else round(self.predicted_bound, 12),
            "pisot": self.pisot,
            "minimal_poly_flag": self.minimal_poly_flag,
            "verdict": self.verdict.value,
        }


def minimal_poly_flag(parry_poly: IntPolynomial, defining: IntPolynomial) -> str:
    if parry_poly == defining:
        return "yes"
    if parry_poly.degree > defining.degree:
        return "no"
    return "unknown"


def drift_report(system: ParrySystem, n_max: int, constants: AsymptoticConstants | None = None) -> DriftReport:
    """Exact sweep of b_n - c_beta n for n <= n_max, with the predicted verdict and bound."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    beta = system.beta
    if constants is None:
        constants = c_beta(beta, system.expansion, system.parry_poly)
    roots_p = conjugate_roots(system.parry_poly, beta)
    roots_f = roots_p if system.parry_poly == beta.f else conjugate_roots(beta.f, beta)
    # beta's conjugates are among the roots of both p and f
    tests = (is_pisot(system.parry_poly, roots_p), is_pisot(beta.f, roots_f))
    if any(tests):
        pisot = True
    elif system.parry_poly == beta.f and tests[0].verdict is PisotVerdict.NOT_PISOT:
        pisot = False
    else:
        pisot = None
    verdict = boundedness_predicted(system.expansion, system.parry_poly, beta.f, roots_p)
    bound = None
    if verdict is Boundedness.BOUNDED:
        bound = float(drift_bound(constants, beta.to_mpf(roots_p.prec), roots_p))

    hi = lo = None
    arg_hi = arg_lo = 0
    for n, value in drift_sequence(system, constants, n_max):
        if hi is None or value > hi:
            hi, arg_hi = value, n
        if lo is None or value < lo:
            lo, arg_lo = value, n
    hi_f, lo_f = float(hi), float(lo)
    if abs(hi_f) >= abs(lo_f):
        sup, arg = abs(hi_f), arg_hi
    else:
        sup, arg = abs(lo_f), arg_lo
    return DriftReport(
        n_max=n_max,
        sup_drift=sup,
        arg_max=arg,
        predicted_bound=bound,
        pisot=pisot,
        minimal_poly_flag=minimal_poly_flag(system.parry_poly, beta.f),
        verdict=verdict,
        max_drift=hi,
        min_drift=lo,
    )
