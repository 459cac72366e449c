"""Exact beta-numeration: expansions, Parry numbers, beta-integers and their drift."""

from betanum.asymptotics import (
    AsymptoticConstants,
    Boundedness,
    ConjugateSet,
    DriftReport,
    QuadraticUnitKind,
    boundedness_predicted,
    c_beta,
    c_beta_product,
    conjugate_roots,
    drift,
    drift_bound,
    drift_report,
    drift_via_conjugates,
    is_pisot,
    quadratic_unit_formula,
)
from betanum.betaint import (
    DistanceSet,
    ParrySystem,
    UExpansion,
    b_from_digits,
    beta_integers,
    distances,
    expansion_to_n,
    n_to_expansion,
)
from betanum.errors import BetaNumError
from betanum.exactfield import AlgebraicReal, FieldElement, IntPolynomial, algebraic_real_new
from betanum.expansion import BetaExpansion, Order, digits_value, greedy_expand, parry_valid, radix_compare
from betanum.presets import PRESETS, from_poly, preset
from betanum.renyi import (
    ParryClass,
    RenyiExpansion,
    Status,
    classify,
    infinite_renyi,
    parry_polynomial,
    renyi_expansion,
    t_step,
)
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

__version__ = "0.1.0"
