"""Eventually periodic digit strings: indexing, suffixes, lexicographic order."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterator, Sequence


@dataclass(frozen=True)
class PeriodicWord:
    """The infinite string ``prefix · period^ω``.

    An empty period means the string continues with ``0^ω``.
    """

    prefix: tuple[int, ...]
    period: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period) or (0,))

    def __getitem__(self, i: int) -> int:
        n = len(self.prefix)
        if i < n:
            return self.prefix[i]
        return self.period[(i - n) % len(self.period)]

    def take(self, n: int) -> tuple[int, ...]:
        if n <= len(self.prefix):
            return self.prefix[:n]
        rest = n - len(self.prefix)
        reps, extra = divmod(rest, len(self.period))
        return self.prefix + self.period * reps + self.period[:extra]

    def __iter__(self) -> Iterator[int]:
        yield from self.prefix
        while True:
            yield from self.period

    def suffix(self, i: int) -> "PeriodicWord":
        n = len(self.prefix)
        if i <= n:
            return PeriodicWord(self.prefix[i:], self.period)
        k = (i - n) % len(self.period)
        return PeriodicWord((), self.period[k:] + self.period[:k])

    def distinct_suffix_starts(self) -> range:
        return range(len(self.prefix) + len(self.period))


def horizon(u: PeriodicWord, v: PeriodicWord) -> int:
    """Length after which agreement of u and v is permanent."""
    pu, pv = len(u.period), len(v.period)
    return max(len(u.prefix), len(v.prefix)) + lcm(pu, pv) + max(pu, pv)


def lex_compare(u: PeriodicWord, v: PeriodicWord) -> int:
    h = horizon(u, v)
    a, b = u.take(h), v.take(h)
    return (a > b) - (a < b)


def join_digits(digits: Sequence[int], sep: str | None = None) -> str:
    """Contiguous digits, or space separated as soon as one digit exceeds 9."""
    if sep is None:
        sep = " " if any(d > 9 for d in digits) else ""
    return sep.join(str(d) for d in digits)
