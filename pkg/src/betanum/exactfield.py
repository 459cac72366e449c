"""Exact arithmetic in Q(beta) for a real algebraic number beta.

beta is held as a monic squarefree integer polynomial together with a
rational isolating interval.  Elements of Q(beta) are rational coefficient
vectors reduced modulo that polynomial.  Signs are decided exactly: interval
evaluation over a bisection-refined enclosure of beta settles every nonzero
value, and a gcd + Sturm count settles zero.  No floating point is used on
any decision path.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Iterable, Sequence, Union

import mpmath

from betanum.errors import (
    BaseMismatch,
    DivisionByZero,
    NonInvertibleDivisor,
    NotABase,
    NotMonic,
    NotSquarefree,
    RootCountNotOne,
)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# dense polynomials over Q, lowest-degree-first lists

def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    _trim(a)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    r = _trim(a[: len(b) - 1])
    return _trim(q), r


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _monic(a: list) -> list:
    lead = Fraction(a[-1])
    return [Fraction(x) / lead for x in a]


def _poly_gcd(a: Sequence, b: Sequence) -> list:
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return _monic(a) if a else []


def _poly_ext_gcd(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Return (g, s) with s*a = g (mod b), g the monic gcd of a and b."""
    r0, r1 = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    lead = r0[-1]
    return [x / lead for x in r0], [x / lead for x in s0]


def _eval_q(c: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sturm_chain(c: Sequence) -> list[list]:
    p0 = _trim([Fraction(x) for x in c])
    p1 = _trim([i * p0[i] for i in range(1, len(p0))])
    chain = [p0]
    while p1:
        chain.append(p1)
        r = _poly_divmod(chain[-2], chain[-1])[1]
        p1 = [-x for x in r]
    return chain


def _variations(chain: list[list], x: Fraction) -> int:
    signs = [s for s in (_sign(_eval_q(p, x)) for p in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _sturm_count_low(c: Sequence, lo: Fraction, hi: Fraction) -> int:
    chain = _sturm_chain(c)
    if len(chain[0]) <= 1:
        return 0
    return _variations(chain, lo) - _variations(chain, hi)


# ---------------------------------------------------------------------------
# integer polynomials

class IntPolynomial:
    """Integer polynomial; constructed from coefficients highest-degree first."""

    __slots__ = ("_low",)

    def __init__(self, coeffs: Iterable[int]):
        hi_first = [int(c) for c in coeffs]
        low = _trim(hi_first[::-1])
        if len(low) < 2:
            raise ValueError("IntPolynomial needs degree >= 1")
        self._low = tuple(low)

    @classmethod
    def from_low(cls, low: Iterable[int]) -> "IntPolynomial":
        return cls(list(low)[::-1])

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse ``"1,0,-2"`` (highest degree first)."""
        return cls(int(tok) for tok in text.replace(" ", "").split(","))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._low[::-1]

    @property
    def low(self) -> tuple[int, ...]:
        return self._low

    @property
    def degree(self) -> int:
        return len(self._low) - 1

    @property
    def is_monic(self) -> bool:
        return self._low[-1] == 1

    def derivative(self) -> "IntPolynomial | int":
        d = [i * self._low[i] for i in range(1, len(self._low))]
        if len(d) == 1:
            return d[0]
        return IntPolynomial.from_low(d)

    def derivative_low(self) -> tuple[int, ...]:
        return tuple(i * self._low[i] for i in range(1, len(self._low)))

    def is_squarefree(self) -> bool:
        g = _poly_gcd(self._low, self.derivative_low())
        return len(g) <= 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self._low):
            acc = acc * x + c
        return acc

    def at(self, beta: "AlgebraicReal") -> "FieldElement":
        """Evaluate at beta exactly, inside Q(beta)."""
        x = beta.gen()
        acc = beta.zero()
        for c in reversed(self._low):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._low == other._low
        return NotImplemented

    def __hash__(self):
        return hash(self._low)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self._low, "x")


def format_polynomial(low: Sequence, var: str = "x") -> str:
    terms = []
    for k in range(len(low) - 1, -1, -1):
        c = low[k]
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction) and mag.denominator != 1:
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append(("-" if neg else "+") + body)
    return "".join(terms) if terms else "0"


def sturm_root_count(f: IntPolynomial | Sequence[int], lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of squarefree ``f`` in ``(lo, hi]``."""
    low = f.low if isinstance(f, IntPolynomial) else tuple(f)[::-1]
    return _sturm_count_low(low, Fraction(lo), Fraction(hi))


# ---------------------------------------------------------------------------
# interval evaluation over integers

def _interval_eval(nums: Sequence[int], a: int, b: int, q: int) -> tuple[int, int, int]:
    """Enclose sum(nums[i] x^i) for x in [a/q, b/q].

    Returns (L, U, S) with the value in [L/S, U/S].
    """
    d = len(nums) - 1
    qpow = [1] * (d + 1)
    for i in range(1, d + 1):
        qpow[i] = qpow[i - 1] * q
    lo_sum = hi_sum = 0
    pl = ph = 1
    for i, c in enumerate(nums):
        if i:
            cands = (pl * a, pl * b, ph * a, ph * b)
            pl, ph = min(cands), max(cands)
        if c:
            s = qpow[d - i]
            if c > 0:
                lo_sum += c * pl * s
                hi_sum += c * ph * s
            else:
                lo_sum += c * ph * s
                hi_sum += c * pl * s
    return lo_sum, hi_sum, qpow[d]


def _hom_eval(low: Sequence[int], a: int, q: int) -> int:
    d = len(low) - 1
    total = 0
    ap = 1
    qp = q ** d
    for i in range(d + 1):
        total += low[i] * ap * qp
        ap *= a
        if i < d:
            qp //= q
    return total


# ---------------------------------------------------------------------------
# real algebraic numbers

class AlgebraicReal:
    """The unique root of a monic squarefree integer polynomial in ``(lo, hi]``.

    The isolating interval only ever shrinks.  Refinement is guarded by a
    lock so a single instance can be shared between threads.
    """

    def __init__(self, f: IntPolynomial | Sequence[int], lo: Rational, hi: Rational):
        if not isinstance(f, IntPolynomial):
            f = IntPolynomial(f)
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("isolating interval must satisfy lo < hi")
        if not f.is_monic:
            raise NotMonic(f"{f} is not monic")
        if not f.is_squarefree():
            raise NotSquarefree(f"{f} has a repeated factor")
        count = sturm_root_count(f, lo, hi)
        if count != 1:
            raise RootCountNotOne(count)
        self.f = f
        self._lock = threading.Lock()
        q = lcm(lo.denominator, hi.denominator)
        self._a = lo.numerator * (q // lo.denominator)
        self._b = hi.numerator * (q // hi.denominator)
        self._q = q
        self._exact = False
        self._sign_lo = 0
        self._normalize()
        self._cache: dict = {}

    # -- interval maintenance -------------------------------------------------

    def _f_sign(self, a: int, q: int) -> int:
        return _sign(_hom_eval(self.f.low, a, q))

    def _normalize(self) -> None:
        # afterwards either the root is exact, or f(lo) and f(hi) are nonzero
        # with opposite signs
        low = self.f.low
        while True:
            if self._f_sign(self._b, self._q) == 0:
                self._a = self._b
                self._exact = True
                return
            s_lo = self._f_sign(self._a, self._q)
            if s_lo != 0:
                self._sign_lo = s_lo
                return
            a, b, q = 2 * self._a, 2 * self._b, 2 * self._q
            m = (a + b) // 2
            if _sturm_count_low(low, Fraction(m, q), Fraction(b, q)) == 1:
                self._a, self._b, self._q = m, b, q
            else:
                self._a, self._b, self._q = a, m, q

    def _bisect(self, steps: int) -> None:
        for _ in range(steps):
            if self._exact:
                return
            a, b, q = 2 * self._a, 2 * self._b, 2 * self._q
            m = (a + b) // 2
            s = self._f_sign(m, q)
            if s == 0:
                self._a = self._b = m
                self._q = q
                self._exact = True
                return
            if s == self._sign_lo:
                self._a, self._b, self._q = m, b, q
            else:
                self._a, self._b, self._q = a, m, q

    def _width_bits(self) -> int:
        if self._exact:
            return 1 << 30
        return self._q.bit_length() - (self._b - self._a).bit_length()

    def refine(self, bits: int) -> None:
        """Shrink the isolating interval to width at most about ``2**-bits``."""
        with self._lock:
            missing = bits - self._width_bits()
            if missing > 0:
                self._bisect(missing + 1)

    def snapshot(self) -> tuple[int, int, int, bool]:
        with self._lock:
            return self._a, self._b, self._q, self._exact

    @property
    def precision_bits(self) -> int:
        with self._lock:
            return self._width_bits()

    @property
    def lo(self) -> Fraction:
        a, _, q, _ = self.snapshot()
        return Fraction(a, q)

    @property
    def hi(self) -> Fraction:
        _, b, q, _ = self.snapshot()
        return Fraction(b, q)

    @property
    def degree(self) -> int:
        return self.f.degree

    # -- comparisons against rationals --------------------------------------

    def compare(self, r: Rational) -> int:
        """Exact sign of beta - r."""
        r = Fraction(r)
        while True:
            a, b, q, exact = self.snapshot()
            lo, hi = Fraction(a, q), Fraction(b, q)
            if exact:
                return _sign(lo - r)
            if r <= lo:
                return 1
            if r >= hi:
                return -1
            if _eval_q(self.f.low, r) == 0:
                return 0
            self.refine(self.precision_bits + 8)

    def require_base(self) -> "AlgebraicReal":
        if self.compare(1) <= 0:
            raise NotABase(f"root of {self.f} is not > 1")
        return self

    # -- element constructors -----------------------------------------------

    def element(self, coeffs: Iterable[Rational]) -> "FieldElement":
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,))

    def gen(self) -> "FieldElement":
        return FieldElement(self, (0, 1))

    def floor(self) -> int:
        return self.gen().floor()

    def to_mpf(self, prec: int = 128):
        return self.gen().to_mpf(prec)

    def __float__(self):
        return float(self.gen())

    def __repr__(self):
        return f"AlgebraicReal({self.f}, ({self.lo}, {self.hi}])"


def algebraic_real_new(f: IntPolynomial | Sequence[int], lo: Rational, hi: Rational) -> AlgebraicReal:
    return AlgebraicReal(f, lo, hi)


# ---------------------------------------------------------------------------
# elements of Q(beta)

def _reduce_int(v: list[int], f_low: tuple[int, ...]) -> list[int]:
    # f is monic, so reduction keeps integer coefficients
    d = len(f_low) - 1
    for k in range(len(v) - 1, d - 1, -1):
        c = v[k]
        if c:
            off = k - d
            for j in range(d):
                if f_low[j]:
                    v[off + j] -= c * f_low[j]
    v = v[:d]
    if len(v) < d:
        v.extend([0] * (d - len(v)))
    return v


def _normalized(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den != 1:
        g = gcd(den, *nums)
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
    return tuple(nums), den


class FieldElement:
    """sum(coeffs[i] * beta**i), reduced modulo the defining polynomial.

    Stored as integer numerators over one positive common denominator, in
    lowest terms, so equal coefficient vectors have equal keys.
    """

    __slots__ = ("base", "nums", "den")

    def __init__(self, base: AlgebraicReal, coeffs: Iterable[Rational]):
        cs = [Fraction(c) for c in coeffs]
        den = 1
        for c in cs:
            den = lcm(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in cs]
        self.base = base
        self.nums, self.den = _normalized(_reduce_int(nums, base.f.low), den)

    @classmethod
    def _raw(cls, base: AlgebraicReal, nums, den: int = 1) -> "FieldElement":
        obj = cls.__new__(cls)
        obj.base = base
        obj.nums, obj.den = _normalized(list(nums), den) if den != 1 else (tuple(nums), 1)
        return obj

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    @property
    def key(self) -> tuple:
        """Canonical exact representation, usable as a dictionary key."""
        return self.nums, self.den

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.base is not self.base:
                raise BaseMismatch("elements live over different bases")
            return other
        if isinstance(other, int):
            return FieldElement._raw(self.base, (other,) + (0,) * (len(self.nums) - 1))
        if isinstance(other, Fraction):
            return FieldElement._raw(
                self.base, (other.numerator,) + (0,) * (len(self.nums) - 1), other.denominator
            )
        return None

    # -- ring operations ------------------------------------------------------

    def _combine(self, o: "FieldElement", sign: int) -> "FieldElement":
        if self.den == o.den:
            return FieldElement._raw(
                self.base, [x + sign * y for x, y in zip(self.nums, o.nums)], self.den
            )
        den = lcm(self.den, o.den)
        sa, sb = den // self.den, den // o.den
        return FieldElement._raw(
            self.base, [x * sa + sign * y * sb for x, y in zip(self.nums, o.nums)], den
        )

    def __add__(self, other):
        if isinstance(other, int) and self.den == 1:
            return FieldElement._raw(self.base, (self.nums[0] + other,) + self.nums[1:])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._combine(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int) and self.den == 1:
            return FieldElement._raw(self.base, (self.nums[0] - other,) + self.nums[1:])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._combine(o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._combine(self, -1)

    def __neg__(self):
        return FieldElement._raw(self.base, [-x for x in self.nums], self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._raw(self.base, [x * other for x in self.nums], self.den)
        if isinstance(other, Fraction):
            return FieldElement._raw(
                self.base, [x * other.numerator for x in self.nums], self.den * other.denominator
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.nums, o.nums
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElement._raw(self.base, _reduce_int(prod, self.base.f.low), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.sign() == 0:
            raise DivisionByZero("inverse of zero in Q(beta)")
        rep = _trim(list(self.coeffs))
        g, s = _poly_ext_gcd(rep, self.base.f.low)
        if len(g) > 1:
            raise NonInvertibleDivisor(
                f"divisor shares the factor {format_polynomial(g)} with {self.base.f}"
            )
        return FieldElement(self.base, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.base.one()
        acc = self
        while n:
            if n & 1:
                result = result * acc
            n >>= 1
            if n:
                acc = acc * acc
        return result

    # -- exact sign -----------------------------------------------------------

    def _is_constant(self) -> bool:
        return not any(self.nums[1:])

    def _is_root_of_rep(self) -> bool:
        rep = _trim(list(self.nums))
        g = _poly_gcd(rep, self.base.f.low)
        if len(g) <= 1:
            return False
        return _sturm_count_low(g, self.base.lo, self.base.hi) == 1

    def sign(self) -> int:
        nums = self.nums
        if self._is_constant():
            return _sign(nums[0])
        base = self.base
        zero_tested = False
        while True:
            a, b, q, exact = base.snapshot()
            lo, hi, _ = _interval_eval(nums, a, b, q)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if exact:
                return 0
            if not zero_tested:
                if self._is_root_of_rep():
                    return 0
                zero_tested = True
            base.refine(max(64, 2 * base.precision_bits))

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rational bounds lo <= value <= hi with hi - lo <= 2**-bits."""
        nums, den = self.nums, self.den
        if self._is_constant():
            v = Fraction(nums[0], den)
            return v, v
        base = self.base
        while True:
            a, b, q, _ = base.snapshot()
            lo, hi, s = _interval_eval(nums, a, b, q)
            # (hi - lo) / (s * den) <= 2**-bits
            if (hi - lo) << bits <= s * den:
                return Fraction(lo, s * den), Fraction(hi, s * den)
            base.refine(max(64, base.precision_bits + bits, 2 * base.precision_bits))

    def floor(self) -> int:
        lo, hi = self.enclosure(8)
        n = floor(lo)
        if floor(hi) == n:
            return n
        return n + 1 if (self - (n + 1)).sign() >= 0 else n

    def frac(self) -> "FieldElement":
        return self - self.floor()

    def to_decimal(self, digits: int = 12) -> str:
        if digits < 1:
            raise ValueError("digits must be >= 1")
        bits = int(digits * 3.3219280948873626) + 3
        lo, hi = self.enclosure(bits)
        mid = (lo + hi) / 2
        scaled = floor(mid * 10 ** digits + Fraction(1, 2))
        neg = scaled < 0
        scaled = abs(scaled)
        whole, part = divmod(scaled, 10 ** digits)
        text = f"{whole}.{part:0{digits}d}"
        return "-" + text if neg and scaled else text

    def to_mpf(self, prec: int = 128):
        lo, hi = self.enclosure(prec + 8)
        mid = (lo + hi) / 2
        with mpmath.workprec(prec):
            return mpmath.mpf(mid.numerator) / mpmath.mpf(mid.denominator)

    def __float__(self):
        lo, hi = self.enclosure(64)
        return float((lo + hi) / 2)

    # -- comparisons ------------------------------------------------------------

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare FieldElement with {type(other).__name__}")
        if o.den == self.den and o.nums == self.nums:
            return 0
        return self._combine(o, -1).sign()

    def __eq__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self._cmp(other) == 0

    def __ne__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self._cmp(other) != 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # value equality is not captured by coefficient vectors when f is reducible
    __hash__ = None

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def is_zero(self) -> bool:
        return self.sign() == 0

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        return format_polynomial(self.coeffs, "b")


# Functional aliases matching the operation names used throughout the package.

def fe_add(a: FieldElement, b) -> FieldElement:
    return a + b


def fe_sub(a: FieldElement, b) -> FieldElement:
    return a - b


def fe_mul(a: FieldElement, b) -> FieldElement:
    return a * b


def fe_pow(a: FieldElement, n: int) -> FieldElement:
    return a ** n


def fe_div(a: FieldElement, b) -> FieldElement:
    return a / b


def fe_sign(a: FieldElement) -> int:
    return a.sign()


def fe_floor(a: FieldElement) -> int:
    return a.floor()


def fe_frac(a: FieldElement) -> FieldElement:
    return a.frac()


def fe_to_decimal(a: FieldElement, digits: int) -> str:
    return a.to_decimal(digits)
