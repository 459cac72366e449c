from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betanum.errors import BadSeedLetter
from betanum.exactfield import IntPolynomial
from betanum.presets import PRESETS, preset
from betanum.renyi import RenyiExpansion, parry_polynomial, renyi_expansion
from betanum.words import (
    SubstMatrix,
    Substitution,
    canonical_substitution,
    char_poly,
    closed_frequencies,
    count_vector,
    empirical_frequencies,
    fixed_point,
    is_primitive,
    substitution_matrix,
    u_sequence,
)

FIB = Substitution(((0, 1), (0,)))
TRIB = Substitution(((0, 1), (0, 2), (0,)))
ALL_PRESETS = sorted(PRESETS) + ["int:2", "int:3"]


def test_canonical_substitution_examples():
    assert canonical_substitution(RenyiExpansion.parse("1 1")) == FIB
    assert canonical_substitution(RenyiExpansion.parse("2 (1)^w")) == Substitution(((0, 0, 1), (0, 1)))
    assert canonical_substitution(RenyiExpansion.parse("1 1 1")) == TRIB
    assert canonical_substitution(RenyiExpansion.parse("2")) == Substitution(((0, 0),))
    assert str(FIB) == "0 -> 01\n1 -> 0"


def test_substitution_matrix_examples():
    assert substitution_matrix(FIB).entries == ((1, 1), (1, 0))
    assert str(substitution_matrix(FIB)) == "[[1,1],[1,0]]"
    assert substitution_matrix(Substitution(((0, 0, 1), (0, 1)))).entries == ((2, 1), (1, 1))
    assert substitution_matrix(TRIB).entries == ((1, 1, 0), (1, 0, 1), (1, 0, 0))


def test_is_primitive_examples():
    assert is_primitive(SubstMatrix(((1, 1), (1, 0))))
    assert not is_primitive(SubstMatrix(((1, 0), (0, 1))))
    assert not is_primitive(SubstMatrix(((0, 1), (1, 0))))


def test_char_poly_examples():
    assert char_poly(SubstMatrix(((1, 1), (1, 0)))) == IntPolynomial([1, -1, -1])
    assert char_poly(SubstMatrix(((2, 1), (1, 1)))) == IntPolynomial([1, -3, 1])
    assert char_poly(SubstMatrix(((2,),))) == IntPolynomial([1, -2])
    # det(xI - M) for a non-companion 3x3 checked by cofactor expansion
    assert char_poly(SubstMatrix(((1, 2, 0), (0, 1, 3), (4, 0, 1)))) == IntPolynomial([1, -3, 3, -25])


def test_fixed_point_examples():
    assert fixed_point(FIB).prefix(13) == tuple(int(c) for c in "0100101001001")
    assert fixed_point(Substitution(((0, 0),))).prefix(5) == (0,) * 5
    assert fixed_point(TRIB).prefix(7) == tuple(int(c) for c in "0102010")
    w = fixed_point(FIB)
    assert w[20] == w.prefix(21)[20]
    with pytest.raises(BadSeedLetter):
        fixed_point(Substitution(((1,), (0,))))


def test_closed_frequencies_examples():
    tau = preset("tau")
    b = tau.gen()
    rho = closed_frequencies(tau, renyi_expansion(tau))
    assert rho == [b / (1 + b), 1 / (1 + b)]
    assert [x.to_decimal(4) for x in rho] == ["0.6180", "0.3820"]
    two = preset("int:2")
    assert closed_frequencies(two, renyi_expansion(two)) == [1]
    tau2 = preset("tau2")
    c = tau2.gen()
    assert closed_frequencies(tau2, renyi_expansion(tau2)) == [(c - 1) / c, 1 / c]


def test_empirical_frequencies_examples():
    assert empirical_frequencies(fixed_point(FIB), 13) == [Fraction(8, 13), Fraction(5, 13)]
    assert empirical_frequencies(fixed_point(TRIB), 1) == [1, 0, 0]
    tau2 = preset("tau2")
    d = renyi_expansion(tau2)
    closed = closed_frequencies(tau2, d)
    emp = empirical_frequencies(fixed_point(canonical_substitution(d)), 10 ** 5)
    assert all(abs(c - e) <= Fraction(1, 10 ** 4) for c, e in zip(closed, emp))


def test_u_sequence_examples():
    assert u_sequence(substitution_matrix(FIB), 6) == [1, 2, 3, 5, 8, 13, 21]
    assert u_sequence(SubstMatrix(((2, 1), (1, 1))), 4) == [1, 3, 8, 21, 55]
    assert u_sequence(SubstMatrix(((2,),)), 4) == [1, 2, 4, 8, 16]


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_structural_coincidences(name):
    beta = preset(name)
    d = renyi_expansion(beta)
    s = canonical_substitution(d)
    M = substitution_matrix(s)
    assert char_poly(M) == parry_polynomial(d)
    assert is_primitive(M)
    U = u_sequence(M, 20)
    w = fixed_point(s)
    image = (0,)
    for i in range(21):
        if len(image) > 10 ** 6:
            break
        assert U[i] == len(image)
        if i <= 15:
            assert w.prefix(U[i]) == image
        image = s(image)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["tau", "tau2", "tribonacci", "theta"]), st.lists(st.integers(0, 2), max_size=40))
def test_abelianization(name, word):
    s = canonical_substitution(renyi_expansion(preset(name)))
    M = substitution_matrix(s)
    word = [a % s.d for a in word]
    v = count_vector(word, s.d)
    image = count_vector(s(word), s.d)
    assert image == tuple(sum(v[i] * M.entries[i][j] for i in range(s.d)) for j in range(s.d))


def test_frequency_error_trend():
    for name in ("tau", "tau2"):
        beta = preset(name)
        d = renyi_expansion(beta)
        closed = closed_frequencies(beta, d)
        w = fixed_point(canonical_substitution(d))
        errors = []
        for n in (10 ** 3, 10 ** 4, 10 ** 5):
            emp = empirical_frequencies(w, n)
            errors.append(max(abs(c - e) for c, e in zip(closed, emp)))
        # n * error stays bounded (Pisot discrepancy)
        assert all(e * n < 1 for e, n in zip(errors, (10 ** 3, 10 ** 4, 10 ** 5)))
        assert errors[0] >= errors[1] >= errors[2] and errors[2] < errors[0]
