import json
from importlib import resources

import jsonschema
import mpmath
import pytest

from betanum.asymptotics import (
    CONJUGATE_SUM_SIGN,
    Boundedness,
    ConjugateSet,
    PisotVerdict,
    QuadraticUnitKind,
    boundedness_predicted,
    c_beta,
    c_beta_product,
    calibrate_conjugate_sign,
    conjugate_roots,
    drift,
    drift_bound,
    drift_report,
    drift_sequence,
    drift_via_conjugates,
    is_pisot,
    quadratic_unit_formula,
    root_of_unity_order,
)
from betanum.betaint import ParrySystem, UExpansion
from betanum.errors import (
    NonRealResult,
    NotPisot,
    NotQuadratic,
    NotSquarefree,
    PrecisionNotReached,
    RepeatedRoots,
    UndeterminedInput,
)
from betanum.exactfield import IntPolynomial
from betanum.presets import from_poly, preset
from betanum.renyi import RenyiExpansion, renyi_expansion

FIVE = ["tau", "tau2", "delta", "theta", "tribonacci"]
SYSTEMS = {name: ParrySystem.of(preset(name)) for name in FIVE + ["int:2"]}
with mpmath.workprec(128):
    SQRT5 = mpmath.sqrt(5)
    PHI = (1 + SQRT5) / 2


@pytest.fixture(autouse=True)
def oracle_precision():
    with mpmath.workprec(128):
        yield


def constants(name):
    s = SYSTEMS[name]
    return c_beta(s.beta, s.expansion, s.parry_poly)


def roots(name):
    s = SYSTEMS[name]
    return conjugate_roots(s.parry_poly, s.beta)


def test_c_beta_examples():
    c = constants("tau")
    b = SYSTEMS["tau"].beta.gen()
    assert c.c_beta_exact == (2 * b - 1) / (b + 1)
    assert c.c_beta_exact == (b * b + 1) / b ** 3
    assert c.decimal(6) == "0.854102"
    assert (c.l, c.L) == (0, 2)
    c2 = constants("tau2")
    b2 = SYSTEMS["tau2"].beta.gen()
    assert c2.c_beta_exact == 1 - 1 / b2 ** 2
    assert c2.decimal(6) == "0.854102"
    assert (c2.l, c2.L) == (1, 1)
    assert constants("int:2").c_beta_exact == 1


@pytest.mark.parametrize("name", FIVE)
def test_c_beta_range(name):
    c = constants(name).c_beta_exact
    assert 0 < c <= 1


def test_c_beta_numeric_fallback():
    # (x^2 - x - 1)(x - 1): beta^2 - 1 is a zero divisor in this ring
    beta = from_poly("1,-2,0,1", "3/2,2")
    s = ParrySystem.of(beta)
    c = c_beta(beta, s.expansion, s.parry_poly)
    assert not c.exact
    assert abs(c.c_beta_numeric - 1 / PHI ** 3 * (PHI ** 2 + 1)) < mpmath.mpf("1e-30")
    value = drift(s, 2, c)
    assert abs(value - (PHI - 2 * c.c_beta_numeric)) < mpmath.mpf("1e-30")


def test_c_beta_undetermined():
    with pytest.raises(UndeterminedInput):
        c_beta(preset("tau"), RenyiExpansion((1,), (), "Undetermined"))


@pytest.mark.parametrize("name", FIVE + ["int:2"])
def test_c_beta_product(name):
    c = constants(name)
    value = c_beta_product(SYSTEMS[name].beta.to_mpf(128), roots(name), c.l, c.L)
    assert abs(value - c.c_beta_numeric) < 1e-10
    if name == "int:2":
        assert value == 1


def test_conjugate_root_examples():
    r = roots("tau")
    assert len(r) == 1 and abs(r.roots[0] - (1 - SQRT5) / 2) < mpmath.mpf("1e-35")
    r = roots("tau2")
    assert abs(r.roots[0] - (3 - SQRT5) / 2) < mpmath.mpf("1e-35")
    assert len(roots("int:2")) == 0
    r = roots("tribonacci")
    assert r.distinct and len(r) == 2
    assert abs(r.roots[0] - mpmath.conj(r.roots[1])) < mpmath.mpf("1e-30")
    assert r.residual_bound <= mpmath.mpf("1e-30")


def test_conjugate_root_errors():
    tau = preset("tau")
    with pytest.raises(NotSquarefree):
        conjugate_roots(IntPolynomial([1, -2, 1]), tau)
    with pytest.raises(PrecisionNotReached):
        conjugate_roots(IntPolynomial([1, -1, -1, -1]), preset("tribonacci"), precision=mpmath.mpf("1e-60"), bits=64)


def test_is_pisot_examples():
    t = is_pisot(SYSTEMS["tau"].parry_poly, roots("tau"))
    assert t.verdict is PisotVerdict.PISOT and abs(t.margin - 0.381966) < 1e-6
    assert is_pisot(SYSTEMS["tau2"].parry_poly, roots("tau2"))
    beta = from_poly("1,-1,-3", "2,3")
    r = conjugate_roots(beta.f, beta)
    assert abs(r.roots[0] - (1 - mpmath.sqrt(13)) / 2) < mpmath.mpf("1e-30")
    assert is_pisot(beta.f, r).verdict is PisotVerdict.NOT_PISOT


def test_boundedness_examples():
    for name in ("tau", "tau2"):
        s = SYSTEMS[name]
        assert boundedness_predicted(s.expansion, s.parry_poly, s.beta.f, roots(name)) is Boundedness.BOUNDED


def test_boundedness_non_minimal_parry_polynomial():
    # plastic number: p = (x^3 - x - 1)(x^2 - x + 1) has sixth roots of unity
    beta = from_poly("1,0,-1,-1", "1,2")
    s = ParrySystem.of(beta)
    assert s.parry_poly.degree > beta.f.degree
    assert root_of_unity_order(s.parry_poly) == 6
    r = conjugate_roots(s.parry_poly, beta)
    assert boundedness_predicted(s.expansion, s.parry_poly, beta.f, r) is Boundedness.UNBOUNDED_PREDICTED
    report = drift_report(s, 200)
    assert report.pisot is True and report.minimal_poly_flag == "no" and report.predicted_bound is None


def test_boundedness_non_pisot():
    # 2 cos(pi/7) is Parry with an irreducible Parry polynomial, but has a conjugate of modulus 1.247
    beta = from_poly("1,-1,-2,1", "1,2")
    s = ParrySystem.of(beta)
    assert str(s.expansion) == "1 (1 0)^w"
    r = conjugate_roots(s.parry_poly, beta)
    assert boundedness_predicted(s.expansion, s.parry_poly, beta.f, r) is Boundedness.UNBOUNDED_PREDICTED
    with pytest.raises(NotPisot):
        drift_bound(c_beta(beta, s.expansion, s.parry_poly), beta.to_mpf(128), r)
    assert drift_report(s, 100).pisot is False


def test_boundedness_unknown_fallback():
    # defining polynomial (x^2 - x - 1)(x + 3) is not the Parry polynomial, and nothing is decidable
    beta = from_poly("1,2,-4,-3", "1,2")
    s = ParrySystem.of(beta)
    r = conjugate_roots(s.parry_poly, beta)
    assert boundedness_predicted(s.expansion, s.parry_poly, beta.f, r) is Boundedness.UNKNOWN
    assert drift_report(s, 100).minimal_poly_flag == "unknown"


def test_drift_examples():
    s, c = SYSTEMS["tau"], constants("tau")
    assert drift(s, 0, c) == 0
    d2 = drift(s, 2, c)
    assert abs(d2.to_mpf(128) - (PHI - 2 * (PHI ** 2 + 1) / PHI ** 3)) < mpmath.mpf("1e-35")
    assert d2.to_decimal(6) == "-0.090170"
    d1 = drift(SYSTEMS["tau2"], 1, constants("tau2"))
    assert d1 == 1 / SYSTEMS["tau2"].beta.gen() ** 2
    assert d1.to_decimal(6) == "0.145898"


def test_drift_integer_base_is_zero():
    s, c = SYSTEMS["int:2"], constants("int:2")
    assert all(v == 0 for _, v in drift_sequence(s, c, 500))


@pytest.mark.parametrize("name", FIVE)
def test_sign_calibration(name):
    assert calibrate_conjugate_sign(SYSTEMS[name], constants(name), roots(name)) == CONJUGATE_SUM_SIGN


def test_drift_via_conjugates_examples():
    s, c, r = SYSTEMS["tau"], constants("tau"), roots("tau")
    v = drift_via_conjugates(2, UExpansion((1, 0)), r, c, s.expansion)
    assert abs(abs(v) - mpmath.mpf("0.0901699437494742")) < 1e-15
    assert abs(v - drift(s, 2, c).to_mpf(128)) < mpmath.mpf("1e-30")
    assert drift_via_conjugates(0, UExpansion(()), r, c, s.expansion) == 0
    s2, c2, r2 = SYSTEMS["tau2"], constants("tau2"), roots("tau2")
    assert s2.digits_of(7) == UExpansion((2, 1))
    v7 = drift_via_conjugates(7, UExpansion((2, 1)), r2, c2, s2.expansion)
    assert abs(v7 - drift(s2, 7, c2).to_mpf(128)) < 1e-9


@pytest.mark.parametrize("name", FIVE)
def test_conjugate_formula_equivalence(name):
    s, c, r = SYSTEMS[name], constants(name), roots(name)
    for n, value in drift_sequence(s, c, 300):
        v = drift_via_conjugates(n, s.digits_of(n), r, c, s.expansion)
        assert abs(v - value.to_mpf(128)) < 1e-9


def test_drift_via_conjugates_errors():
    s, c, r = SYSTEMS["tribonacci"], constants("tribonacci"), roots("tribonacci")
    half = ConjugateSet(r.poly, r.beta_root, r.roots[:1], r.radii[:1], r.residual_bound, True, r.prec)
    with pytest.raises(NonRealResult):
        drift_via_conjugates(5, s.digits_of(5), half, c, s.expansion)
    clumped = ConjugateSet(r.poly, r.beta_root, r.roots, r.radii, r.residual_bound, False, r.prec)
    with pytest.raises(RepeatedRoots):
        drift_via_conjugates(5, s.digits_of(5), clumped, c, s.expansion)
    with pytest.raises(RepeatedRoots):
        drift_bound(c, s.beta.to_mpf(128), clumped)
    with pytest.raises(RepeatedRoots):
        c_beta_product(s.beta.to_mpf(128), clumped, c.l, c.L)


def test_drift_bound_examples():
    c = constants("tau")
    bound = drift_bound(c, PHI, roots("tau"))
    oracle = 2 * (PHI ** 2 + 1) / PHI ** 3 * PHI / ((1 - 1 / PHI) ** 2 * SQRT5)
    assert abs(bound - oracle) < mpmath.mpf("1e-30")
    assert abs(bound - 8.47) < 0.01
    assert drift_bound(constants("int:2"), 2, roots("int:2")) == 0
    b2 = drift_bound(constants("tau2"), PHI ** 2, roots("tau2"))
    assert b2 >= 1 / PHI ** 2


def test_quadratic_unit_examples():
    tau = preset("tau")
    b = tau.gen()
    assert quadratic_unit_formula(tau, 2, QuadraticUnitKind.SIMPLE) == b
    assert quadratic_unit_formula(tau, 0, QuadraticUnitKind.SIMPLE) == 0
    tau2 = preset("tau2")
    assert quadratic_unit_formula(tau2, 7, QuadraticUnitKind.NON_SIMPLE) == 2 * tau2.gen() + 1
    with pytest.raises(NotQuadratic):
        quadratic_unit_formula(preset("tribonacci"), 3, QuadraticUnitKind.SIMPLE)


@pytest.mark.parametrize("name, kind", [("tau", QuadraticUnitKind.SIMPLE), ("tau2", QuadraticUnitKind.NON_SIMPLE)])
def test_quadratic_unit_matches_stream(name, kind):
    s = SYSTEMS[name]
    for n, b, _ in s.stream():
        if n > 2000:
            break
        assert quadratic_unit_formula(s.beta, n, kind) == b


def _schema(name):
    return json.loads(resources.files("betanum").joinpath("schemas", name).read_text())


def test_drift_report_examples():
    r = drift_report(SYSTEMS["tau"], 10 ** 4)
    assert r.sup_drift <= 1 / float(PHI) ** 3
    assert r.verdict is Boundedness.BOUNDED and r.sup_drift <= r.predicted_bound
    assert r.pisot is True and r.minimal_poly_flag == "yes"
    jsonschema.validate(r.to_json(), _schema("drift_report.json"))
    r2 = drift_report(SYSTEMS["tau2"], 10 ** 4)
    assert r2.sup_drift <= 1 / float(PHI) ** 2
    r0 = drift_report(SYSTEMS["int:2"], 10 ** 3)
    assert r0.sup_drift == 0
    with pytest.raises(ValueError):
        drift_report(SYSTEMS["tau"], 0)


@pytest.mark.parametrize("name", FIVE)
def test_cesaro_and_bound_domination(name):
    s, c = SYSTEMS[name], constants(name)
    n_max = 10 ** 4
    r = drift_report(s, n_max, c)
    b_n = s.b(n_max)
    # |b_N / N - c| <= sup / N, exactly
    sup = max(abs(r.max_drift), abs(r.min_drift))
    assert abs(b_n / n_max - c.c_beta_exact) <= sup / n_max
    assert r.sup_drift <= r.predicted_bound
