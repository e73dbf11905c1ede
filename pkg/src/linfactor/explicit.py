"""Oracle-free factorization of f(x^q - x) for trace-zero irreducible f with
gcd(deg f, p) = 1.

In that situation the composition splits into exactly q irreducible factors
of degree n, and they are the shifts g0(x + a) of a single factor g0: the
minimal polynomial of beta = -(1/n) * sum i * alpha^(q^(n-1-i)), which
satisfies beta^q - beta = alpha for a root alpha of f.  Degree 2 (odd p) and
degree 3 (even q) admit fully closed forms.
"""

from __future__ import annotations

import dataclasses

from .errors import (
    FieldMismatchError,
    InternalCheckError,
    PreconditionError,
)
from .ext import ExtElement, ExtField, frobenius
from .field import FieldElement
from .linearized import compose_f_Lg, element_degree
from .poly import Poly, is_irreducible


@dataclasses.dataclass(frozen=True)
class ShiftFactorization:
    """The q pairwise distinct shifts g0(x + a), a running over the field in
    canonical order; their product is the full composition."""

    g0: Poly
    shifts: tuple[Poly, ...]

    def product(self) -> Poly:
        result = Poly.one(self.g0.field)
        for s in self.shifts:
            result = result * s
        return result


def beta_from_alpha(f: Poly) -> ExtElement:
    """An element beta with beta^q - beta = alpha, for alpha a root of f.

    beta = -(1/n) * (alpha^(q^(n-2)) + 2*alpha^(q^(n-3)) + ... + (n-1)*alpha);
    requires the coefficient of x^(n-1) to vanish and gcd(n, p) = 1.  The
    defining identity is checked before returning."""
    field = f.field
    if f.is_zero or f.degree < 1 or not f.is_monic or not is_irreducible(f):
        raise PreconditionError("f must be monic irreducible")
    n = f.degree
    if not f.coeff(n - 1).is_zero:
        raise PreconditionError("f has nonzero trace")
    if n % field.p == 0:
        raise PreconditionError("deg f is divisible by the characteristic")
    ext = ExtField(f)
    alpha = ext.generator
    conjugates = [alpha]
    for _ in range(n - 2):
        conjugates.append(frobenius(conjugates[-1], 1))
    acc = ext.zero
    for i in range(1, n):
        acc = acc + conjugates[n - 1 - i] * field(i)
    beta = acc * (-field(n).inverse())
    if frobenius(beta, 1) - beta != alpha:
        raise InternalCheckError("beta does not satisfy beta^q - beta = alpha")
    return beta


def minimal_polynomial(b: ExtElement) -> Poly:
    """Monic minimal polynomial of b over the base field, as the product of
    the distinct Frobenius conjugates of b."""
    ext = b.ext
    base = ext.base
    d = element_degree(b)
    coeffs: list[ExtElement] = [ext.one]
    conj = b
    for _ in range(d):
        new = [ext.zero] * (len(coeffs) + 1)
        for idx, c in enumerate(coeffs):
            new[idx + 1] = new[idx + 1] + c
            new[idx] = new[idx] - c * conj
        coeffs = new
        conj = frobenius(conj, 1)
    out = []
    for c in coeffs:
        if not c.value.is_zero and c.value.degree >= 1:
            raise InternalCheckError("minimal polynomial coefficient left the base field")
        out.append(c.value.coeff(0))
    return Poly.from_coeffs(base, out)


def factor_f_xq_minus_x(f: Poly) -> ShiftFactorization:
    """Complete factorization of f(x^q - x) into the q shifts of one factor.

    g0 is the minimal polynomial of beta_from_alpha(f); shifting by every
    field element gives pairwise distinct monic irreducibles whose product
    reproduces the composition exactly (both facts are checked)."""
    field = f.field
    beta = beta_from_alpha(f)
    g0 = minimal_polynomial(beta)
    n = f.degree
    if g0.degree != n:
        raise InternalCheckError(f"base factor has degree {g0.degree}, expected {n}")
    shifts = tuple(g0.shifted(a) for a in field.elements())
    if len(set(shifts)) != field.q:
        raise InternalCheckError("shift polynomials are not pairwise distinct")
    composition = compose_f_Lg(f, Poly.x(field) - Poly.one(field))
    product = Poly.one(field)
    for s in shifts:
        product = product * s
    if product != composition:
        raise InternalCheckError("shift product does not reproduce the composition")
    return ShiftFactorization(g0, shifts)


def closed_form_quadratic(a: FieldElement) -> ShiftFactorization:
    """Closed-form factorization of (x^q - x)^2 - a for odd p and a nonsquare
    a: the base factor is x^2 - a/4 and the shift at c is
    x^2 + 2cx + c^2 - a/4.  Checked against factor_f_xq_minus_x(x^2 - a)."""
    field = a.field
    if field.p == 2:
        raise PreconditionError("the quadratic closed form needs odd characteristic")
    q = field.q
    if a.is_zero or a ** ((q - 1) // 2) != -field.one:
        raise PreconditionError("a must be a nonsquare")
    quarter = a / field(4)
    g0 = Poly.from_coeffs(field, [-quarter, field.zero, field.one])
    shifts = tuple(
        Poly.from_coeffs(field, [c * c - quarter, 2 * c, field.one])
        for c in field.elements()
    )
    built = ShiftFactorization(g0, shifts)
    reference = factor_f_xq_minus_x(
        Poly.from_coeffs(field, [-a, field.zero, field.one])
    )
    if built != reference:
        raise InternalCheckError("quadratic closed form disagrees with the base method")
    return built


def closed_form_cubic_char2(a: FieldElement, b: FieldElement) -> ShiftFactorization:
    """Closed-form factorization of f(x^q + x) for even q and irreducible
    f = x^3 + ax + b: the factors are f(x + c) = x^3 + cx^2 + (c^2 + a)x +
    (c^3 + ac + b).  Checked against factor_f_xq_minus_x(f)."""
    field = a.field
    if b.field != field:
        raise FieldMismatchError("a and b must share a field")
    if field.p != 2:
        raise PreconditionError("the cubic closed form needs characteristic 2")
    f = Poly.from_coeffs(field, [b, a, field.zero, field.one])
    if not is_irreducible(f):
        raise PreconditionError("x^3 + ax + b is not irreducible")
    shifts = tuple(
        Poly.from_coeffs(field, [c**3 + a * c + b, c * c + a, c, field.one])
        for c in field.elements()
    )
    built = ShiftFactorization(f, shifts)
    reference = factor_f_xq_minus_x(f)
    if built != reference:
        raise InternalCheckError("cubic closed form disagrees with the base method")
    return built
