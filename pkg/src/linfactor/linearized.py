"""q-associates and linearized polynomials.

A polynomial g = sum a_i x^i corresponds to the linearized polynomial
L_g = sum a_i x^(q^i), which acts as a GF(q)-linear map on every extension.
This module evaluates L_g, computes the additive order of an element (the
monic generator of the ideal of all g with L_g(a) = 0), and builds the
composed polynomial f(L_g(x)).
"""

from __future__ import annotations

import dataclasses
import functools

import numpy as np

from .errors import FieldMismatchError, PreconditionError, SizeLimitError
from .ext import ExtElement, frobenius
from .field import FieldElement, FiniteField
from .poly import Poly, coefficient_limit, factor


@dataclasses.dataclass(frozen=True)
class LinearizedPoly:
    """A linearized polynomial, stored through its q-associate source g.

    The expanded form (degree q^deg(g)) is only materialized on request.
    """

    source: Poly

    def terms(self) -> list[tuple[int, FieldElement]]:
        """Nonzero terms of the expanded form as (exponent q^i, coefficient)."""
        g = self.source
        q = g.field.q
        return [
            (q**i, g.coeff(i))
            for i in range(g._arr.shape[0])
            if not g.coeff(i).is_zero
        ]

    def materialize(self) -> Poly:
        """The expanded polynomial sum a_i x^(q^i)."""
        g = self.source
        field = g.field
        if g.is_zero:
            return Poly.zero(field)
        size = field.q**g.degree + 1
        if size > coefficient_limit():
            raise SizeLimitError(
                f"linearized polynomial needs {size} coefficients, over the guardrail"
            )
        arr = np.zeros((size, field.k), dtype=np.int64)
        for exp, c in self.terms():
            arr[exp] = c.coeffs
        return Poly._make(field, arr)


def q_associate(g: Poly) -> LinearizedPoly:
    """The linearized polynomial whose q-associate is g."""
    return LinearizedPoly(g)


def materialize(L: LinearizedPoly) -> Poly:
    return L.materialize()


def strip_x_power(g: Poly) -> tuple[int, Poly]:
    """Split g = x^s * g0 with g0(0) != 0; returns (s, g0)."""
    if g.is_zero:
        raise PreconditionError("cannot strip the zero polynomial")
    s = 0
    while g.coeff(s).is_zero:
        s += 1
    if s == 0:
        return 0, g
    return s, Poly._make(g.field, g._arr[s:])


def eval_linearized(g: Poly, a: ExtElement) -> ExtElement:
    """L_g(a) = sum g_i * a^(q^i); GF(q)-linear in a."""
    if g.field != a.ext.base:
        raise FieldMismatchError("g must live over the element's base field")
    acc = a.ext.zero
    conj = a
    q = g.field.q
    for i in range(g._arr.shape[0]):
        c = g.coeff(i)
        if not c.is_zero:
            acc = acc + conj * c
        if i + 1 < g._arr.shape[0]:
            conj = conj**q
    return acc


def element_degree(a: ExtElement) -> int:
    """Degree of the minimal polynomial of a over GF(q); the zero element
    counts as degree 1."""
    q = a.ext.base.q
    d = 1
    conj = a**q
    while conj != a:
        conj = conj**q
        d += 1
    return d


@functools.lru_cache(maxsize=None)
def _xd_minus_1_factors(field: FiniteField, d: int):
    one = Poly.one(field)
    xd = Poly.monomial(field, d) - one
    return factor(xd).factors


def fq_order(a: ExtElement) -> Poly:
    """The additive analogue of multiplicative order: the monic generator h
    of the ideal of all g with L_g(a) = 0.

    h divides x^d - 1 for d the degree of a, and gcd(h, x) = 1.  The zero
    element has order 1 and base-field units have order x - 1.
    """
    field = a.ext.base
    d = element_degree(a)
    h = Poly.monomial(field, d) - Poly.one(field)
    for irr, mult in _xd_minus_1_factors(field, d):
        for _ in range(mult):
            candidate = h // irr
            if eval_linearized(candidate, a).is_zero:
                h = candidate
            else:
                break
    return h.monic()


def compose_f_Lg(f: Poly, g: Poly) -> Poly:
    """The composed polynomial f(L_g(x)), of degree deg(f) * q^deg(g).

    A power x^s in g contributes a q^s-th power of the composition with the
    stripped part, computed by exponent dilation.
    """
    if f.is_zero or f.degree < 1:
        raise PreconditionError("f must be nonconstant")
    if g.is_zero:
        raise PreconditionError("g must be nonzero")
    if f.field != g.field:
        raise FieldMismatchError("f and g must share a field")
    field = f.field
    q = field.q
    total = f.degree * q**g.degree + 1
    if total > coefficient_limit():
        raise SizeLimitError(
            f"composition needs {total} coefficients, over the guardrail"
        )
    s, g0 = strip_x_power(g)
    terms = q_associate(g0).terms()
    # Horner steps: acc <- acc * L_g0 + next coefficient of f
    acc = Poly.from_coeffs(field, [f.lead])
    p = field.p
    for i in range(f._arr.shape[0] - 2, -1, -1):
        if acc.is_zero:
            prod_arr = np.zeros((0, field.k), dtype=np.int64)
        else:
            length = acc._arr.shape[0] + terms[-1][0]
            prod_arr = np.zeros((length, field.k), dtype=np.int64)
            for exp, c in terms:
                scaled = acc * c
                if not scaled.is_zero:
                    prod_arr[exp : exp + scaled._arr.shape[0]] += scaled._arr
            prod_arr %= p
        acc = Poly._make(field, prod_arr) + f.coeff(i)
    if s:
        acc = acc.dilate(q**s)
    return acc
