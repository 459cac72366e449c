"""Rényi expansion of unity, its infinite variant, and the Parry polynomial."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Sequence

from betanum.digitstring import PeriodicWord
from betanum.errors import StateOutOfRange, UndeterminedInput
from betanum.exactfield import AlgebraicReal, FieldElement, IntPolynomial

DEFAULT_MAX_STEPS = 10_000


class Status(str, enum.Enum):
    FINITE = "Finite"
    EVENTUALLY_PERIODIC = "EventuallyPeriodic"
    UNDETERMINED = "Undetermined"


class ParryClass(str, enum.Enum):
    SIMPLE = "SimpleParry"
    NON_SIMPLE = "NonSimpleParry"
    NOT_DETECTED = "NotDetectedWithinBound"


@dataclass(frozen=True)
class RenyiExpansion:
    """``t_1 … t_m (t_{m+1} … t_{m+p})^ω``; an empty period means a finite string."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()
    status: Status = Status.FINITE

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(t) for t in self.preperiod))
        object.__setattr__(self, "period", tuple(int(t) for t in self.period))
        object.__setattr__(self, "status", Status(self.status))

    @property
    def determined(self) -> bool:
        return self.status is not Status.UNDETERMINED

    @property
    def digits(self) -> tuple[int, ...]:
        """t_1 … t_{m+p}: the preperiod followed by one copy of the period."""
        return self.preperiod + self.period

    @property
    def m(self) -> int:
        return len(self.preperiod)

    @property
    def p(self) -> int:
        return len(self.period)

    @property
    def alphabet_size(self) -> int:
        return self.m + self.p

    @property
    def unified_lengths(self) -> tuple[int, int]:
        """(l, L): preperiod and period lengths of the infinite expansion d*."""
        if self.status is Status.FINITE:
            return 0, self.m
        return self.m, self.p

    def t(self, i: int) -> int:
        """1-based digit t_i of the infinite string (finite strings pad with 0)."""
        return self.word()[i - 1]

    def word(self) -> PeriodicWord:
        return PeriodicWord(self.preperiod, self.period)

    def __str__(self) -> str:
        parts = [str(t) for t in self.preperiod]
        if self.period:
            parts.append("(" + " ".join(str(t) for t in self.period) + ")^w")
        if self.status is Status.UNDETERMINED:
            parts.append("...")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "preperiod": list(self.preperiod),
            "period": list(self.period),
            "status": self.status.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RenyiExpansion":
        return cls(tuple(data["preperiod"]), tuple(data["period"]), Status(data["status"]))

    @classmethod
    def parse(cls, text: str) -> "RenyiExpansion":
        """Parse ``"1 1"``, ``"2 (1)^w"`` or ``"(1 0)^w"``."""
        text = text.strip()
        m = re.fullmatch(r"([\d\s]*?)\s*(?:\(([\d\s]+)\)\^[wω])?", text)
        if m is None or not text:
            raise ValueError(f"cannot parse digit string {text!r}")
        pre = tuple(int(t) for t in m.group(1).split())
        per = tuple(int(t) for t in m.group(2).split()) if m.group(2) else ()
        return cls(pre, per, Status.EVENTUALLY_PERIODIC if per else Status.FINITE)


def t_step(state: FieldElement) -> tuple[int, FieldElement]:
    """One step of T(x) = {beta x}: returns (floor(beta x), {beta x})."""
    if state.sign() < 0 or (1 - state).sign() < 0:
        raise StateOutOfRange(f"state {state} is outside [0, 1]")
    x = state.base.gen() * state
    digit = x.floor()
    return digit, x - digit


def _canonical(pre: tuple[int, ...], per: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    p = len(per)
    for q in range(1, p + 1):
        if p % q == 0 and per[:q] * (p // q) == per:
            per = per[:q]
            break
    while pre and pre[-1] == per[-1]:
        per = (pre[-1],) + per[:-1]
        pre = pre[:-1]
    return pre, per


def renyi_expansion(beta: AlgebraicReal, max_steps: int = DEFAULT_MAX_STEPS) -> RenyiExpansion:
    """Iterate T from 1 until the state hits 0 or repeats, or the budget runs out."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    beta.require_base()
    state = beta.one()
    seen: dict = {}
    digits: list[int] = []
    for step in range(max_steps):
        digit, state = t_step(state)
        digits.append(digit)
        if state.sign() == 0:
            return RenyiExpansion(tuple(digits), (), Status.FINITE)
        key = state.key
        if key in seen:
            start = seen[key]
            pre, per = _canonical(tuple(digits[:start]), tuple(digits[start:]))
            return RenyiExpansion(pre, per, Status.EVENTUALLY_PERIODIC)
        seen[key] = step + 1
    return RenyiExpansion(tuple(digits), (), Status.UNDETERMINED)


def infinite_renyi(d: RenyiExpansion) -> RenyiExpansion:
    """d*(1): finite ``t_1…t_m`` becomes ``(t_1…t_{m-1}(t_m - 1))^ω``."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    if d.status is Status.EVENTUALLY_PERIODIC:
        return d
    period = d.preperiod[:-1] + (d.preperiod[-1] - 1,)
    return RenyiExpansion((), period, Status.EVENTUALLY_PERIODIC)


def _poly_low_from_digits(head: Sequence[int], size: int) -> list[int]:
    # x^size - (t_1 x^{size-1} + ... + t_size), lowest degree first
    low = [0] * (size + 1)
    low[size] = 1
    for i, t in enumerate(head, start=1):
        low[size - i] -= t
    return low


def parry_polynomial(d: RenyiExpansion, beta: AlgebraicReal | None = None) -> IntPolynomial:
    """Monic integer polynomial read off d(1); checked to vanish at beta when given."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    m, p = d.m, d.p
    head = _poly_low_from_digits(d.preperiod, m)
    if p == 0:
        low = head
    else:
        # (x^p - 1) * head - (t_{m+1} x^{p-1} + ... + t_{m+p})
        low = [0] * (m + p + 1)
        for i, c in enumerate(head):
            low[i + p] += c
            low[i] -= c
        for j, t in enumerate(d.period, start=1):
            low[p - j] -= t
    poly = IntPolynomial.from_low(low)
    if beta is not None and poly.at(beta).sign() != 0:
        raise ArithmeticError(f"{poly} does not vanish at {beta!r}")
    return poly


def classify(d: RenyiExpansion) -> ParryClass:
    if d.status is Status.FINITE:
        return ParryClass.SIMPLE
    if d.status is Status.EVENTUALLY_PERIODIC:
        return ParryClass.NON_SIMPLE
    return ParryClass.NOT_DETECTED
