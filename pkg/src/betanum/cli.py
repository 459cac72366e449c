"""Command-line front end: ``betanum <command> --preset tau …``.

Exit codes: 0 success, 1 verification failure or bad input, 2 no Parry
expansion found within --max-steps, 3 exact arithmetic fell back to numerics
under --strict.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from betanum.asymptotics import Boundedness, c_beta, drift_report, drift_sequence, fixed_decimal
from betanum.betaint import ParrySystem, b_from_digits
from betanum.errors import BetaNumError, NotParry
from betanum.exactfield import FieldElement
from betanum.expansion import greedy_expand, parry_valid
from betanum.presets import from_poly, preset
from betanum.renyi import DEFAULT_MAX_STEPS, ParryClass, classify, infinite_renyi, parry_polynomial, renyi_expansion
from betanum.words import char_poly, closed_frequencies, empirical_frequencies, is_primitive

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_STRICT = 0, 1, 2, 3

_CLASS_NAMES = {ParryClass.SIMPLE: "simple", ParryClass.NON_SIMPLE: "non-simple"}


class _Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code


def _beta(args):
    if args.preset:
        return preset(args.preset)
    if not (args.poly and args.interval):
        raise _Exit(EXIT_FAIL, "give --preset, or both --poly and --interval")
    return from_poly(args.poly, args.interval)


def _system(args) -> ParrySystem:
    try:
        return ParrySystem.of(_beta(args), args.max_steps)
    except NotParry as exc:
        raise _Exit(EXIT_BUDGET, str(exc)) from None


def _constants(args, system: ParrySystem):
    constants = c_beta(system.beta, system.expansion, system.parry_poly)
    if not constants.exact and args.strict:
        raise _Exit(EXIT_STRICT, "c_beta has no exact form over the defining polynomial")
    return constants


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# -- commands -----------------------------------------------------------------

def cmd_renyi(args) -> int:
    beta = _beta(args)
    d = renyi_expansion(beta, args.max_steps)
    if not d.determined:
        print(f"d=undetermined  steps={args.max_steps}")
        _emit({"d": d.to_json(), "class": ParryClass.NOT_DETECTED.value})
        return EXIT_BUDGET
    dstar = infinite_renyi(d)
    p = parry_polynomial(d, beta)
    cls = classify(d)
    print(f"d={d}  d*={dstar}  class={_CLASS_NAMES[cls]}  parry={p}")
    _emit({
        "d": d.to_json(),
        "dstar": dstar.to_json(),
        "class": cls.value,
        "parry": list(p.coeffs),
        "parry_text": str(p),
    })
    return EXIT_OK


def cmd_betaints(args) -> int:
    system = _system(args)
    rows = []
    for n, b, _ in system.stream():
        if n > args.n:
            break
        digits = str(system.digits_of(n)) or "0"
        rows.append((n, digits, b))
    if args.format == "json":
        _emit({"rows": [
            {"n": n, "digits": digits, "b_n": b.to_decimal(args.digits), "exact": str(b)}
            for n, digits, b in rows
        ]})
    else:
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(["n", "digits", "b_n"])
        for n, digits, b in rows:
            out.writerow([n, digits, b.to_decimal(args.digits)])
    return EXIT_OK


def cmd_drift(args) -> int:
    system = _system(args)
    constants = _constants(args, system)
    report = drift_report(system, args.n, constants)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            out = csv.writer(fh, lineterminator="\n")
            out.writerow(["n", "drift"])
            for n, value in drift_sequence(system, constants, args.n):
                out.writerow([n, fixed_decimal(value, args.digits)])
    _emit(report.to_json())
    return EXIT_OK


def _parse_value(beta, text: str) -> FieldElement:
    return beta.element(Fraction(tok.strip()) for tok in text.split(","))


def cmd_expand(args) -> int:
    beta = _beta(args)
    x = _parse_value(beta, args.value)
    print(greedy_expand(x, args.max_frac_digits))
    return EXIT_OK


def cmd_cbeta(args) -> int:
    system = _system(args)
    constants = _constants(args, system)
    exact = str(constants.c_beta_exact) if constants.exact else "none"
    print(f"c={constants.decimal(args.digits)}  exact={exact}")
    return EXIT_OK


def cmd_subst(args) -> int:
    system = _system(args)
    images = " / ".join(line for line in str(system.substitution).splitlines())
    print(f"{images}  M={system.matrix}")
    return EXIT_OK


def cmd_freq(args) -> int:
    system = _system(args)
    closed = closed_frequencies(system.beta, system.expansion)
    empirical = empirical_frequencies(system.word(), args.n)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["letter", "empirical", "closed", "error"])
    for i, (e, c) in enumerate(zip(empirical, closed)):
        err = abs(c - e)
        out.writerow([i, fixed_decimal(c.base.element([e]), args.digits), c.to_decimal(args.digits),
                      err.to_decimal(args.digits)])
    return EXIT_OK


def _verify_checks(args):
    system = _system(args)
    beta, n_max = system.beta, args.n
    yield "char_poly equals Parry polynomial", char_poly(system.matrix) == system.parry_poly
    yield "substitution matrix primitive", is_primitive(system.matrix)

    two_path = admissible = True
    for n, b, _ in system.stream():
        if n > n_max:
            break
        digits = system.digits_of(n)
        admissible = admissible and parry_valid(digits.digits, system.dstar)
        two_path = two_path and b_from_digits(digits, beta, validate=False) == b
    yield f"streamed b_n equals digit sum for n <= {n_max}", two_path
    yield f"greedy digits admissible for n <= {n_max}", admissible

    closed = closed_frequencies(beta, system.expansion)
    empirical = empirical_frequencies(system.word(), max(n_max, 1))
    worst = max(abs(c - e) for c, e in zip(closed, empirical))
    # error <= n^(-1/2), squared to stay exact
    yield f"letter frequencies within n^(-1/2) at n = {n_max}", worst * worst * max(n_max, 1) <= 1

    constants = c_beta(beta, system.expansion, system.parry_poly)
    report = drift_report(system, max(n_max, 1), constants)
    if report.verdict is Boundedness.BOUNDED:
        yield "sup drift below the explicit bound", report.sup_drift <= report.predicted_bound


def cmd_verify(args) -> int:
    failed = False
    for label, ok in _verify_checks(args):
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        failed = failed or not ok
    return EXIT_FAIL if failed else EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="tau, tau2, delta, theta, tribonacci or int:<k>")
    common.add_argument("--poly", help="integer coefficients, highest degree first: 1,-1,-1")
    common.add_argument("--interval", help="isolating interval lo,hi (integers or a/b)")
    common.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    common.add_argument("--digits", type=int, default=12, help="decimal places in output")
    common.add_argument("--strict", action="store_true", help="fail (exit 3) instead of falling back to numerics")

    parser = argparse.ArgumentParser(prog="betanum", description="Exact beta-numeration toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("renyi", parents=[common], help="expansion of unity and Parry polynomial").set_defaults(func=cmd_renyi)

    p = sub.add_parser("betaints", parents=[common], help="beta-integers b_0 … b_N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_betaints)

    p = sub.add_parser("drift", parents=[common], help="sweep b_n - c n and report its supremum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write per-n drift CSV here")
    p.set_defaults(func=cmd_drift)

    p = sub.add_parser("expand", parents=[common], help="greedy beta-expansion of a field element")
    p.add_argument("--value", required=True, help="rational coefficients, lowest degree first: 1/1,1/1 is 1+b")
    p.add_argument("--max-frac-digits", type=int, default=256)
    p.set_defaults(func=cmd_expand)

    sub.add_parser("cbeta", parents=[common], help="density constant c_beta").set_defaults(func=cmd_cbeta)
    sub.add_parser("subst", parents=[common], help="canonical substitution and its matrix").set_defaults(func=cmd_subst)

    p = sub.add_parser("freq", parents=[common], help="empirical vs closed letter frequencies")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("verify", parents=[common], help="run the invariant checks")
    p.add_argument("--n", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(f"betanum: {exc}", file=sys.stderr)
        return exc.code
    except (BetaNumError, ValueError) as exc:
        print(f"betanum: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
