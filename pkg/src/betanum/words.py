"""Canonical substitutions of Parry numbers and the words they generate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from betanum.digitstring import join_digits
from betanum.errors import BadSeedLetter, UndeterminedInput
from betanum.exactfield import AlgebraicReal, FieldElement, IntPolynomial
from betanum.renyi import RenyiExpansion, Status

Word = tuple[int, ...]


@dataclass(frozen=True)
class Substitution:
    """A non-erasing morphism on the alphabet {0, …, d-1}, given by letter images."""

    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(tuple(int(a) for a in w) for w in self.images)
        d = len(images)
        if d == 0:
            raise ValueError("empty alphabet")
        for i, w in enumerate(images):
            if not w:
                raise ValueError(f"image of letter {i} is empty")
            if any(not 0 <= a < d for a in w):
                raise ValueError(f"image of letter {i} leaves the alphabet")
        object.__setattr__(self, "images", images)

    @property
    def d(self) -> int:
        return len(self.images)

    def __call__(self, word: Sequence[int]) -> Word:
        out: list[int] = []
        for a in word:
            out.extend(self.images[a])
        return tuple(out)

    def iterate(self, word: Sequence[int], n: int) -> Word:
        w = tuple(word)
        for _ in range(n):
            w = self(w)
        return w

    def __str__(self) -> str:
        sep = " " if self.d > 10 else ""
        return "\n".join(f"{i} -> {join_digits(w, sep)}" for i, w in enumerate(self.images))


@dataclass(frozen=True)
class SubstMatrix:
    """Row i counts the letters of the image of letter i."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))

    @property
    def d(self) -> int:
        return len(self.entries)

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.entries) + "]"


def canonical_substitution(d: RenyiExpansion) -> Substitution:
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    t = d.digits
    size = d.alphabet_size
    images = [(0,) * t[i] + (i + 1,) for i in range(size - 1)]
    last = (0,) * t[size - 1]
    if d.status is Status.EVENTUALLY_PERIODIC:
        last += (d.m,)
    images.append(last)
    return Substitution(tuple(images))


def substitution_matrix(s: Substitution) -> SubstMatrix:
    rows = []
    for w in s.images:
        row = [0] * s.d
        for a in w:
            row[a] += 1
        rows.append(tuple(row))
    return SubstMatrix(tuple(rows))


def count_vector(word: Sequence[int], d: int) -> tuple[int, ...]:
    counts = np.bincount(np.asarray(word, dtype=np.int64), minlength=d)
    return tuple(int(c) for c in counts)


def is_primitive(M: SubstMatrix) -> bool:
    """Some power up to Wielandt's bound (d-1)^2 + 1 is strictly positive."""
    B = (M.to_numpy() > 0).astype(np.int64)
    P = B.copy()
    for _ in range((M.d - 1) ** 2 + 1):
        if P.all():
            return True
        P = ((P @ B) > 0).astype(np.int64)
    return False


def char_poly(M: SubstMatrix) -> IntPolynomial:
    """det(xI - M) by Berkowitz's division-free algorithm."""
    A = [list(row) for row in M.entries]
    vect = [1]
    for r in range(len(A)):
        S = [row[:r] for row in A[:r]]
        R = A[r][:r]
        C = [A[i][r] for i in range(r)]
        col = [1, -A[r][r]]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(S[i][j] * v[j] for j in range(r)) for i in range(r)]
        vect = [sum(col[i - j] * vect[j] for j in range(len(vect)) if 0 <= i - j < len(col))
                for i in range(r + 2)]
    return IntPolynomial(vect)


class WordStream:
    """Lazily generated fixed point ``lim φ^n(0)``.

    Not safe to share between threads; create one stream per consumer.
    """

    def __init__(self, s: Substitution):
        seed = s.images[0]
        if seed[0] != 0 or len(seed) < 2:
            raise BadSeedLetter("the image of 0 must start with 0 and have length >= 2")
        self.substitution = s
        self._buf: list[int] = list(seed)
        self._src = 1

    def _extend(self, n: int) -> None:
        buf, images = self._buf, self.substitution.images
        while len(buf) < n:
            buf.extend(images[buf[self._src]])
            self._src += 1

    def prefix(self, n: int) -> Word:
        self._extend(n)
        return tuple(self._buf[:n])

    def __getitem__(self, i: int) -> int:
        self._extend(i + 1)
        return self._buf[i]

    def __iter__(self) -> Iterator[int]:
        i = 0
        while True:
            if i >= len(self._buf):
                self._extend(2 * len(self._buf))
            yield self._buf[i]
            i += 1


def fixed_point(s: Substitution) -> WordStream:
    return WordStream(s)


def closed_frequencies(beta: AlgebraicReal, d: RenyiExpansion) -> list[FieldElement]:
    """Letter frequencies of u_beta from the left Perron eigenvector of M."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    b = beta.gen()
    m, p = d.m, d.p
    if d.status is Status.FINITE:
        total = sum((b ** i for i in range(m)), beta.zero())
        return [b ** (m - 1 - i) / total for i in range(m)]
    bp1 = b ** p - 1
    denom = b ** m * bp1
    sigma = [b ** (m - 1 - i) * bp1 for i in range(m)] + [b ** (m + p - 1 - i) for i in range(m, m + p)]
    return [s * (b - 1) / denom for s in sigma]


def empirical_frequencies(w: WordStream, n: int) -> list[Fraction]:
    if n < 1:
        raise ValueError("n must be >= 1")
    counts = count_vector(w.prefix(n), w.substitution.d)
    return [Fraction(c, n) for c in counts]


def u_sequence(M: SubstMatrix, n: int) -> list[int]:
    """U_0 … U_n with U_i = e_1 M^i (1, …, 1)^T = |φ^i(0)|."""
    if n < 0:
        raise ValueError("n must be >= 0")
    d = M.d
    row = [1] + [0] * (d - 1)
    out = []
    for _ in range(n + 1):
        out.append(sum(row))
        row = [sum(row[i] * M.entries[i][j] for i in range(d)) for j in range(d)]
    return out
