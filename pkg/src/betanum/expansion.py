"""Greedy beta-expansions, their exact values, the Parry admissibility test and radix order."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence, Union

from betanum.digitstring import PeriodicWord, join_digits, lex_compare
from betanum.errors import NegativeInput, TruncatedExpansion
from betanum.exactfield import AlgebraicReal, FieldElement
from betanum.renyi import RenyiExpansion

DEFAULT_MAX_FRAC_DIGITS = 256
POINT = "•"


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class BetaExpansion:
    """``x_k … x_0 • x_{-1} …`` with an optional fractional period.

    ``int_digits`` is empty for values below 1 (printed as ``0``).
    """

    int_digits: tuple[int, ...]
    frac_preperiod: tuple[int, ...] = ()
    frac_period: tuple[int, ...] = ()
    truncated: bool = False

    def __post_init__(self):
        digits = tuple(self.int_digits)
        while digits and digits[0] == 0:
            digits = digits[1:]
        object.__setattr__(self, "int_digits", digits)
        object.__setattr__(self, "frac_preperiod", tuple(self.frac_preperiod))
        object.__setattr__(self, "frac_period", tuple(self.frac_period))

    @property
    def k(self) -> int:
        """Exponent of the leading integer digit (-1 when there is none)."""
        return len(self.int_digits) - 1

    def word(self) -> PeriodicWord:
        """The full digit string, most significant first, zero padded."""
        return PeriodicWord(self.int_digits + self.frac_preperiod, self.frac_period)

    def digits(self) -> tuple[int, ...]:
        return self.int_digits + self.frac_preperiod + self.frac_period

    def __str__(self) -> str:
        everything = self.digits()
        sep = " " if any(d > 9 for d in everything) else ""
        head = join_digits(self.int_digits, sep) if self.int_digits else "0"
        tail = join_digits(self.frac_preperiod, sep)
        if self.frac_period:
            tail += (sep if tail else "") + "(" + join_digits(self.frac_period, sep) + ")^w"
        if self.truncated:
            tail += "..."
        return f"{head}{POINT}{tail}"

    @classmethod
    def parse(cls, text: str) -> "BetaExpansion":
        """Inverse of ``str``; accepts ``•`` or ``.`` as the radix point."""
        text = text.strip().replace(".", POINT).replace("ω", "w")
        head, _, tail = text.partition(POINT)
        m = re.fullmatch(r"([\d ]*?)\s*(?:\(([\d ]+)\)\^w)?", tail)
        if m is None:
            raise ValueError(f"cannot parse expansion {text!r}")

        def digits(s: str) -> tuple[int, ...]:
            s = s.strip()
            if not s:
                return ()
            return tuple(int(t) for t in s.split()) if " " in s else tuple(int(c) for c in s)

        return cls(digits(head), digits(m.group(1)), digits(m.group(2) or ""))


def greedy_expand(x: FieldElement, max_frac_digits: int = DEFAULT_MAX_FRAC_DIGITS) -> BetaExpansion:
    """The beta-expansion of x >= 0, with exact period detection on the fractional part."""
    s = x.sign()
    if s < 0:
        raise NegativeInput("beta-expansions are defined for x >= 0")
    if s == 0:
        return BetaExpansion(())
    b = x.base.gen()
    int_digits: list[int] = []
    r = x
    if (x - 1).sign() >= 0:
        powers = [x.base.one()]
        while (x - powers[-1] * b).sign() >= 0:
            powers.append(powers[-1] * b)
        for power in reversed(powers):
            # comparison ladder instead of division
            j = 0
            while (r - (j + 1) * power).sign() >= 0:
                j += 1
            int_digits.append(j)
            r = r - j * power

    frac: list[int] = []
    seen: dict = {}
    while True:
        if r.sign() == 0:
            return BetaExpansion(tuple(int_digits), tuple(frac))
        key = r.key
        if key in seen:
            start = seen[key]
            return BetaExpansion(tuple(int_digits), tuple(frac[:start]), tuple(frac[start:]))
        if len(frac) >= max_frac_digits:
            return BetaExpansion(tuple(int_digits), tuple(frac), (), truncated=True)
        seen[key] = len(frac)
        y = b * r
        digit = y.floor()
        frac.append(digit)
        r = y - digit


def digits_value(e: BetaExpansion, beta: AlgebraicReal) -> FieldElement:
    """Exact value of an expansion; the period is summed as a geometric series."""
    if e.truncated:
        raise TruncatedExpansion("value of a truncated expansion is not exact")
    b = beta.gen()
    value = beta.zero()
    for d in e.int_digits:
        value = value * b + d
    if not e.frac_preperiod and not e.frac_period:
        return value
    inv = b.inverse()
    scale = beta.one()
    for d in e.frac_preperiod:
        scale = scale * inv
        value = value + d * scale
    if e.frac_period:
        p = len(e.frac_period)
        block = beta.zero()
        for d in e.frac_period:
            block = block * b + d
        value = value + scale * block / (b ** p - 1)
    return value


DigitInput = Union[Sequence[int], PeriodicWord, BetaExpansion]


def _finite_valid(w: tuple[int, ...], dword: PeriodicWord) -> bool:
    pad = len(dword.prefix) + 2 * len(dword.period)
    ref = dword.take(len(w) + pad)
    zeros = (0,) * pad
    for i in range(len(w)):
        s = w[i:] + zeros
        if not s < ref[: len(s)]:
            return False
    return True


def parry_valid(digits: DigitInput, dstar: RenyiExpansion) -> bool:
    """True iff every suffix of the digit string is lexicographically below d*(1).

    Finite sequences are read as padded with ``0^ω``.
    """
    dword = dstar.word()
    if isinstance(digits, BetaExpansion):
        digits = digits.word()
    if not isinstance(digits, PeriodicWord):
        return _finite_valid(tuple(digits), dword)
    if digits.period == (0,):
        return _finite_valid(digits.prefix, dword)
    return all(lex_compare(digits.suffix(i), dword) < 0 for i in digits.distinct_suffix_starts())


def radix_compare(a: BetaExpansion, b: BetaExpansion) -> Order:
    if a.truncated or b.truncated:
        raise TruncatedExpansion("radix comparison needs exact expansions")
    width = max(len(a.int_digits), len(b.int_digits))
    ua = PeriodicWord((0,) * (width - len(a.int_digits)) + a.int_digits + a.frac_preperiod, a.frac_period)
    ub = PeriodicWord((0,) * (width - len(b.int_digits)) + b.int_digits + b.frac_preperiod, b.frac_period)
    return Order(lex_compare(ua, ub))
