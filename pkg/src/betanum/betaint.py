"""beta-integers b_n: streamed from the fixed point, or read off greedy U-digits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from betanum.digitstring import join_digits
from betanum.errors import InvalidDigits, NotParry, UndeterminedInput
from betanum.exactfield import AlgebraicReal, FieldElement, IntPolynomial
from betanum.expansion import parry_valid
from betanum.renyi import (
    DEFAULT_MAX_STEPS,
    RenyiExpansion,
    infinite_renyi,
    parry_polynomial,
    renyi_expansion,
)
from betanum.words import (
    SubstMatrix,
    Substitution,
    WordStream,
    canonical_substitution,
    fixed_point,
    substitution_matrix,
    u_sequence,
)


@dataclass(frozen=True)
class DistanceSet:
    """Gap lengths Δ_0 … Δ_{d-1}; Δ_i is the gap coded by letter i."""

    deltas: tuple[FieldElement, ...]

    def __len__(self):
        return len(self.deltas)

    def __getitem__(self, i: int) -> FieldElement:
        return self.deltas[i]

    def __iter__(self):
        return iter(self.deltas)

    def check(self) -> None:
        if self.deltas[0] != 1:
            raise ArithmeticError("Δ_0 must be 1")
        if any(x.sign() <= 0 for x in self.deltas):
            raise ArithmeticError("distances must be positive")
        for i, x in enumerate(self.deltas):
            for y in self.deltas[i + 1:]:
                if x == y:
                    raise ArithmeticError("distances must be mutually distinct")


def distances(beta: AlgebraicReal, d: RenyiExpansion, matrix: SubstMatrix | None = None) -> DistanceSet:
    """Δ_i = beta^i - sum_{j<=i} t_j beta^(i-j), checked as a right eigenvector of M."""
    if not d.determined:
        raise UndeterminedInput("expansion of unity was not determined")
    b = beta.gen()
    t = d.digits
    deltas = []
    delta = beta.one()
    for i in range(d.alphabet_size):
        # Δ_i = beta Δ_{i-1} - t_i
        if i:
            delta = b * delta - t[i - 1]
        deltas.append(delta)
    if matrix is None:
        matrix = substitution_matrix(canonical_substitution(d))
    for row, delta in zip(matrix.entries, deltas):
        image = sum((c * x for c, x in zip(row, deltas)), beta.zero())
        if image != b * delta:
            raise ArithmeticError("distances are not a right eigenvector for beta")
    return DistanceSet(tuple(deltas))


@dataclass(frozen=True)
class UExpansion:
    """Digits a_{k-1} … a_0, most significant first."""

    digits: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(a) for a in self.digits))

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return join_digits(self.digits)

    @classmethod
    def parse(cls, text: str) -> "UExpansion":
        text = text.strip()
        if " " in text:
            return cls(tuple(int(t) for t in text.split()))
        return cls(tuple(int(c) for c in text))


def n_to_expansion(n: int, U: Sequence[int]) -> UExpansion:
    """Greedy representation n = sum a_i U_i."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return UExpansion(())
    if U[-1] <= n:
        raise ValueError(f"U sequence too short to represent {n}")
    k = max(i for i, u in enumerate(U) if u <= n)
    digits = []
    r = n
    for i in range(k, -1, -1):
        a, r = divmod(r, U[i])
        digits.append(a)
    return UExpansion(tuple(digits))


def expansion_to_n(e: UExpansion, U: Sequence[int]) -> int:
    if len(e.digits) > len(U):
        raise ValueError("not enough U entries for this digit string")
    k = len(e.digits)
    return sum(a * U[k - 1 - i] for i, a in enumerate(e.digits))


def b_from_digits(
    e: UExpansion,
    beta: AlgebraicReal,
    dstar: RenyiExpansion | None = None,
    validate: bool = True,
) -> FieldElement:
    """sum a_i beta^i; externally supplied digits are checked against the Parry condition."""
    if validate:
        if dstar is None:
            dstar = infinite_renyi(renyi_expansion(beta))
        if not parry_valid(e.digits, dstar):
            raise InvalidDigits(f"{e} is not an admissible beta-expansion")
    b = beta.gen()
    value = beta.zero()
    for a in e.digits:
        value = value * b + a
    return value


class BetaIntegerStream:
    """Yields ``(n, b_n, u_n)`` where u_n codes the gap b_{n+1} - b_n."""

    def __init__(self, word: WordStream, deltas: DistanceSet):
        self.word = word
        self.deltas = deltas

    def __iter__(self) -> Iterator[tuple[int, FieldElement, int]]:
        b = self.deltas[0].base.zero()
        deltas = self.deltas.deltas
        for n, letter in enumerate(self.word):
            yield n, b, letter
            b = b + deltas[letter]

    def take(self, count: int) -> list[FieldElement]:
        """b_0 … b_{count-1}."""
        out = []
        if count <= 0:
            return out
        for n, b, _ in self:
            out.append(b)
            if n + 1 >= count:
                break
        return out


@dataclass
class ParrySystem:
    """Everything derived from d_beta(1) that the numeration machinery needs."""

    beta: AlgebraicReal
    expansion: RenyiExpansion
    dstar: RenyiExpansion
    parry_poly: IntPolynomial
    substitution: Substitution
    matrix: SubstMatrix
    deltas: DistanceSet
    _U: list[int] = field(default_factory=list, repr=False)

    @classmethod
    def of(cls, beta: AlgebraicReal, max_steps: int = DEFAULT_MAX_STEPS) -> "ParrySystem":
        d = renyi_expansion(beta, max_steps)
        if not d.determined:
            raise NotParry(f"no eventually periodic d(1) within {max_steps} steps")
        s = canonical_substitution(d)
        M = substitution_matrix(s)
        return cls(
            beta=beta,
            expansion=d,
            dstar=infinite_renyi(d),
            parry_poly=parry_polynomial(d, beta),
            substitution=s,
            matrix=M,
            deltas=distances(beta, d, M),
        )

    def U(self, covering: int = 1) -> list[int]:
        """U_0, U_1, … extended until the last entry exceeds ``covering``."""
        if not self._U:
            self._U = u_sequence(self.matrix, 1)
        while self._U[-1] <= covering:
            self._U = u_sequence(self.matrix, 2 * len(self._U))
        return self._U

    def word(self) -> WordStream:
        return fixed_point(self.substitution)

    def stream(self) -> BetaIntegerStream:
        return BetaIntegerStream(self.word(), self.deltas)

    def digits_of(self, n: int) -> UExpansion:
        return n_to_expansion(n, self.U(n))

    def b(self, n: int) -> FieldElement:
        """b_n via the greedy U-digits of n."""
        return b_from_digits(self.digits_of(n), self.beta, validate=False)


def beta_integers(beta: AlgebraicReal, max_steps: int = DEFAULT_MAX_STEPS) -> BetaIntegerStream:
    return ParrySystem.of(beta, max_steps).stream()
