"""Exact computer algebra for compositions with linearized polynomials over
finite fields.

The package predicts, in closed form, how f(L_g(x)) splits into irreducible
factors over GF(q), builds high-degree irreducible polynomials from
primitive ones, and factors f(x^q - x) explicitly; every prediction can be
checked against the built-in brute-force factorization oracle.
"""

from .errors import (
    FieldMismatchError,
    InternalCheckError,
    LinfactorError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .field import (
    FieldElement,
    FiniteField,
    integer_divisors,
    integer_factor,
    integer_phi,
    is_prime,
    ord_mod,
    parse_field_spec,
)
from .poly import (
    Factorization,
    Poly,
    coefficient_limit,
    count_divisors,
    factor,
    gcd,
    irreducibles,
    is_irreducible,
    lcm,
    monic_divisors,
    monic_polys,
    nu,
    ord_x_mod,
    parse_poly,
    phi_q,
    rad,
)
from .ext import ExtElement, ExtField, frobenius, mult_order
from .linearized import (
    LinearizedPoly,
    compose_f_Lg,
    element_degree,
    eval_linearized,
    fq_order,
    materialize,
    q_associate,
    strip_x_power,
)
from .distribution import (
    DegreeDistribution,
    FactorClass,
    additive_distribution,
    butler_distribution,
    irreducible_g_distribution,
    is_composition_irreducible,
    ni_lower_bound,
    split_g,
)
from .construct import (
    ConstructionStep,
    extend_by_primitive,
    is_primitive,
    iterate_f2,
)
from .explicit import (
    ShiftFactorization,
    beta_from_alpha,
    closed_form_cubic_char2,
    closed_form_quadratic,
    factor_f_xq_minus_x,
    minimal_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionStep",
    "DegreeDistribution",
    "ExtElement",
    "ExtField",
    "FactorClass",
    "Factorization",
    "FieldElement",
    "FieldMismatchError",
    "FiniteField",
    "InternalCheckError",
    "LinearizedPoly",
    "LinfactorError",
    "ParseError",
    "Poly",
    "PreconditionError",
    "ShiftFactorization",
    "SizeLimitError",
    "additive_distribution",
    "beta_from_alpha",
    "butler_distribution",
    "closed_form_cubic_char2",
    "closed_form_quadratic",
    "coefficient_limit",
    "compose_f_Lg",
    "count_divisors",
    "element_degree",
    "eval_linearized",
    "extend_by_primitive",
    "factor",
    "factor_f_xq_minus_x",
    "fq_order",
    "frobenius",
    "gcd",
    "integer_divisors",
    "integer_factor",
    "integer_phi",
    "irreducible_g_distribution",
    "irreducibles",
    "is_composition_irreducible",
    "is_irreducible",
    "is_prime",
    "is_primitive",
    "iterate_f2",
    "lcm",
    "materialize",
    "minimal_polynomial",
    "monic_divisors",
    "monic_polys",
    "mult_order",
    "nu",
    "ord_mod",
    "ord_x_mod",
    "parse_field_spec",
    "parse_poly",
    "phi_q",
    "q_associate",
    "rad",
    "split_g",
    "strip_x_power",
]
