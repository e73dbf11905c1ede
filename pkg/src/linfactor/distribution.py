"""Closed-form degree distributions for the irreducible factors of composed
polynomials, together with the irreducibility criteria and the lower bound
on the number of factors.

The additive case covers f(L_g(x)) with f monic irreducible: writing
g = x^s * g0 and splitting g0 = g1 * g2 against the additive order h of the
roots of f (gcd(g1, h) = 1, every irreducible factor of g2 divides h), there
is one factor class per monic divisor G of g1 with order label G*g2*h,
degree ord(x, G*g2*h), and an exactly divisible count.  The multiplicative
case covers f(x^m) the same way with integer orders.
"""

from __future__ import annotations

import dataclasses
import itertools
import math

from .errors import (
    FieldMismatchError,
    InternalCheckError,
    PreconditionError,
    SizeLimitError,
)
from .ext import ExtField
from .field import FiniteField, integer_divisors, integer_factor, integer_phi, ord_mod
from .linearized import fq_order, strip_x_power
from .poly import (
    DIVISOR_LIMIT,
    Poly,
    _ord_from_factor_list,
    _order_of_x_mod_irreducible,
    count_divisors,
    factor,
    gcd,
    is_irreducible,
    nu,
)

import functools


@dataclasses.dataclass(frozen=True)
class FactorClass:
    """A set of irreducible factors sharing one root order.

    order_label is a Poly (additive case) or an int (multiplicative case);
    degree is the common factor degree and count how many factors share it.
    """

    order_label: Poly | int
    degree: int
    count: int


@dataclasses.dataclass(frozen=True)
class DegreeDistribution:
    """Predicted factor classes of a composition.

    total_degree is deg(f) * q^deg(g0); when frobenius_power = s > 0 the full
    composition is the predicted polynomial raised to the q^s-th power, so
    every count carries an implicit multiplicity q^s.
    """

    classes: tuple[FactorClass, ...]
    total_degree: int
    frobenius_power: int = 0

    def __post_init__(self):
        total = sum(fc.degree * fc.count for fc in self.classes)
        if total != self.total_degree:
            raise InternalCheckError(
                f"class degrees sum to {total}, expected {self.total_degree}"
            )
        if len({fc.order_label for fc in self.classes}) != len(self.classes):
            raise InternalCheckError("duplicate order labels in a distribution")

    def histogram(self) -> dict[int, int]:
        """Map degree -> number of predicted factors of that degree."""
        out: dict[int, int] = {}
        for fc in self.classes:
            out[fc.degree] = out.get(fc.degree, 0) + fc.count
        return out

    def factor_count(self) -> int:
        return sum(fc.count for fc in self.classes)


def _class_sort_key(fc: FactorClass):
    label = fc.order_label
    if isinstance(label, int):
        return (fc.degree, (label,))
    return (fc.degree, label.sort_key())


def _require_monic_irreducible(f: Poly, name: str = "f"):
    if f.is_zero or f.degree < 1:
        raise PreconditionError(f"{name} must be nonconstant")
    if not f.is_monic:
        raise PreconditionError(f"{name} must be monic")
    if not is_irreducible(f):
        raise PreconditionError(f"{name} is not irreducible")


@functools.lru_cache(maxsize=None)
def _root_fq_order(f: Poly) -> Poly:
    # additive order h of a root of the monic irreducible f, computed from an
    # explicitly constructed root in GF(q)[z]/(f)
    return fq_order(ExtField(f).generator)


def _scale_argument(f: Poly, c) -> Poly:
    # f(c * x)
    field = f.field
    c = field(c)
    power = field.one
    coeffs = []
    for i in range(f._arr.shape[0]):
        coeffs.append(f.coeff(i) * power)
        power = power * c
    return Poly.from_coeffs(field, coeffs)


def _monicize_pair(f: Poly, g0: Poly) -> tuple[Poly, Poly]:
    # absorb a unit leading coefficient of g0 into f; the composed roots and
    # their additive orders are unchanged because L_(c*g) = c * L_g
    c = g0.lead
    if c == g0.field.one:
        return f, g0
    return _scale_argument(f, c).monic(), g0.monic()


def split_g(g: Poly, h: Poly) -> tuple[Poly, Poly]:
    """The unique split g = g1 * g2 with gcd(g1, h) = 1 and every irreducible
    factor of g2 dividing h; both parts monic."""
    if g.field != h.field:
        raise FieldMismatchError("mismatched fields")
    if g.is_zero:
        raise PreconditionError("g must be nonzero")
    if g.coeff(0).is_zero:
        raise PreconditionError("g is divisible by x")
    g = g.monic()
    if g.degree == 0 or h.degree == 0:
        return g, Poly.one(g.field)
    g2 = gcd(g, h ** int(g.degree))
    g1 = (g // g2).monic()
    return g1, g2


def additive_distribution(f: Poly, g: Poly) -> DegreeDistribution:
    """Factor classes of the composition of f with the linearized form of g.

    f must be monic irreducible; g any nonzero polynomial.  A factor x^s in
    g is stripped and reported as frobenius_power."""
    if f.field != g.field:
        raise FieldMismatchError("f and g must share a field")
    _require_monic_irreducible(f)
    if g.is_zero:
        raise PreconditionError("g must be nonzero")
    field = f.field
    q = field.q
    s, g0 = strip_x_power(g)
    f, g0 = _monicize_pair(f, g0)
    h = _root_fq_order(f)
    g1, g2 = split_g(g0, h)
    n = f.degree
    m = int(g2.degree)
    base_label = g2 * h
    base_parts = factor(base_label).factors if base_label.degree >= 1 else ()
    g1_parts = factor(g1).factors
    lattice = 1
    for _, e in g1_parts:
        lattice *= e + 1
    if lattice > DIVISOR_LIMIT:
        raise SizeLimitError("divisor lattice of g1 exceeds 10^6 entries")
    classes = []
    scale = n * q**m
    for exps in itertools.product(*[range(e + 1) for _, e in g1_parts]):
        G = Poly.one(field)
        phi_G = 1
        parts = list(base_parts)
        for (irr, _), j in zip(g1_parts, exps):
            if j:
                G = G * irr**j
                norm = q**irr.degree
                phi_G *= norm ** (j - 1) * (norm - 1)
                parts.append((irr, j))
        degree = _ord_from_factor_list(field, parts)
        total = scale * phi_G
        if total % degree:
            raise InternalCheckError(
                f"nonintegral factor count {total}/{degree} for divisor {G}"
            )
        classes.append(FactorClass(G * base_label, degree, total // degree))
    classes.sort(key=_class_sort_key)
    return DegreeDistribution(tuple(classes), n * q ** int(g0.degree), s)


def butler_distribution(f: Poly, m: int) -> DegreeDistribution:
    """Factor classes of f(x^m) for monic irreducible f and gcd(m, q) = 1.

    With e the multiplicative order of the roots of f and m = m1 * m2 split
    against e, there is one class per divisor g of m1 with integer order
    label g*m2*e and degree ord(q mod g*m2*e)."""
    _require_monic_irreducible(f)
    if m < 1:
        raise PreconditionError("m must be >= 1")
    field = f.field
    q = field.q
    if math.gcd(m, q) != 1:
        raise PreconditionError(f"m = {m} is not coprime to q = {q}")
    if f == Poly.x(field):
        raise PreconditionError("the roots of x have no multiplicative order")
    e = _order_of_x_mod_irreducible(f)
    m1, m2 = 1, 1
    for prime, a in integer_factor(m):
        if e % prime == 0:
            m2 *= prime**a
        else:
            m1 *= prime**a
    n = f.degree
    classes = []
    for gdiv in integer_divisors(m1):
        label = gdiv * m2 * e
        degree = ord_mod(q, label)
        total = n * m2 * integer_phi(gdiv)
        if total % degree:
            raise InternalCheckError(
                f"nonintegral factor count {total}/{degree} for divisor {gdiv}"
            )
        classes.append(FactorClass(label, degree, total // degree))
    classes.sort(key=_class_sort_key)
    return DegreeDistribution(tuple(classes), n * m, 0)


def _least_p_power_exponent(p: int, bound: int) -> int:
    # least r with p^r >= bound; 0 when bound <= 1
    r = 0
    pe = 1
    while pe < bound:
        pe *= p
        r += 1
    return r


def ni_lower_bound(f: Poly, g: Poly) -> int:
    """Lower bound on the number of irreducible factors of the composition:
    ceil(q^m * W(g1) / p^u) with m = deg(g2), W the divisor count of g1 and
    u the difference of the least p-power exponents covering nu(g2*h) and
    nu(h)."""
    if f.field != g.field:
        raise FieldMismatchError("f and g must share a field")
    _require_monic_irreducible(f)
    if g.is_zero or g.degree < 1:
        raise PreconditionError("g must be nonconstant")
    if g.coeff(0).is_zero:
        raise PreconditionError("g is divisible by x")
    field = f.field
    f, g = _monicize_pair(f, g)
    h = _root_fq_order(f)
    if h.degree == 0:
        raise PreconditionError(
            "degenerate input: the roots of f have additive order 1"
        )
    g1, g2 = split_g(g, h)
    p = field.p
    u = _least_p_power_exponent(p, nu(g2 * h)) - _least_p_power_exponent(p, nu(h))
    W = count_divisors(g1)
    num = field.q ** int(g2.degree) * W
    den = p**u
    return -(-num // den)


def is_composition_irreducible(f: Poly, g: Poly) -> tuple[bool, str]:
    """Decide whether the composition of f with the linearized form of g is
    irreducible, with a reason code.

    Both the closed-form criterion (prime field, and either a degree-one g
    dividing h but not (x^n - 1)/h, or q = 2 with g = x^2 + 1 and squarefree
    h divisible by x + 1) and the class counts are computed; they must agree.
    Codes: 'constant-g', 'degree-one-divisor', 'char2-square', 'reducible'.
    """
    field = f.field
    dist = additive_distribution(f, g)
    by_classes = (
        dist.frobenius_power == 0
        and len(dist.classes) == 1
        and dist.classes[0].count == 1
    )
    q, p = field.q, field.p
    s, g0 = strip_x_power(g)
    g0 = g0.monic()
    if s == 0 and g0.degree == 0:
        # composing with a constant multiple of x keeps f irreducible
        if not by_classes:
            raise InternalCheckError("constant g must give a single-class result")
        return True, "constant-g"
    verdict = False
    code = "reducible"
    if s == 0 and q == p:
        h = _root_fq_order(f)
        n = f.degree
        one = Poly.one(field)
        x = Poly.x(field)
        if g0.degree == 1:
            xn1 = Poly.monomial(field, n) - one
            cofactor = xn1 // h
            if (h % g0).is_zero and not (cofactor % g0).is_zero:
                verdict = True
                code = "degree-one-divisor"
        elif p == 2 and g0 == (x + one) ** 2:
            if nu(h) <= 1 and (h % (x + one)).is_zero:
                verdict = True
                code = "char2-square"
    if verdict != by_classes:
        raise InternalCheckError(
            "closed-form irreducibility criterion disagrees with the class counts"
        )
    # trace shortcuts on their own domains
    if s == 0 and q == p:
        n = f.degree
        trace_nonzero = not f.coeff(n - 1).is_zero
        one = Poly.one(field)
        x = Poly.x(field)
        if g0 == x - one:
            if trace_nonzero != by_classes:
                raise InternalCheckError("trace shortcut disagrees (g = x - 1)")
        if p == 2 and g0 == (x + one) ** 2:
            shortcut = trace_nonzero and n % 2 == 1
            if shortcut != by_classes:
                raise InternalCheckError("trace shortcut disagrees (g = x^2 + 1)")
    return (True, code) if by_classes else (False, "reducible")


def irreducible_g_distribution(f: Poly, g: Poly) -> DegreeDistribution:
    """Distribution for a monic irreducible g coprime to x and to the root
    order h: one factor of degree n plus n(q^d - 1)/lcm(n, e) factors of
    degree lcm(n, e), where e is the order of x mod g.

    The closed form is asserted against the general class computation."""
    if f.field != g.field:
        raise FieldMismatchError("f and g must share a field")
    _require_monic_irreducible(f)
    _require_monic_irreducible(g, name="g")
    if g.coeff(0).is_zero:
        raise PreconditionError("g is divisible by x")
    field = f.field
    h = _root_fq_order(f)
    if gcd(g, h).degree != 0:
        raise PreconditionError("g must be coprime to the root order of f")
    e = _order_of_x_mod_irreducible(g)
    n = f.degree
    d = g.degree
    q = field.q
    lcm_ne = math.lcm(n, e)
    total2 = n * (q**d - 1)
    if total2 % lcm_ne:
        raise InternalCheckError("nonintegral count in the irreducible-g closed form")
    classes = sorted(
        [
            FactorClass(h, n, 1),
            FactorClass(g * h, lcm_ne, total2 // lcm_ne),
        ],
        key=_class_sort_key,
    )
    dist = DegreeDistribution(tuple(classes), n * q**d, 0)
    reference = additive_distribution(f, g)
    if dist != reference:
        raise InternalCheckError(
            "irreducible-g closed form disagrees with the class computation"
        )
    return dist
