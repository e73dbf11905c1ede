"""Constructing high-degree irreducible polynomials from primitive ones.

Composing an irreducible f of degree n with the linearized form of a
primitive g of degree d (with gcd(n, q^d - 1) = 1) splits into exactly two
irreducibles: one of degree n and one of degree n(q^d - 1).  The small one
is the gcd with x^(q^n) - x, so the big one comes out by division, and over
GF(2) the step can be chained.
"""

from __future__ import annotations

import dataclasses
import math

from .errors import (
    FieldMismatchError,
    InternalCheckError,
    PreconditionError,
    SizeLimitError,
)
from .field import ORDER_LIMIT
from .linearized import compose_f_Lg
from .poly import (
    Poly,
    _ModContext,
    _order_of_x_mod_irreducible,
    gcd,
    is_irreducible,
)


@dataclasses.dataclass(frozen=True)
class ConstructionStep:
    """One extension step: f_in(L_g) = g1 * g2 with deg(g1) = deg(f_in) and
    deg(g2) = deg(f_in) * (q^deg(g) - 1); g2 feeds the next step."""

    f_in: Poly
    g: Poly
    g1: Poly
    g2: Poly


def is_primitive(g: Poly) -> bool:
    """True when the roots of g generate the full multiplicative group of
    their field, equivalently the order of x mod g is q^d - 1."""
    if g.is_zero or g.degree < 1 or not is_irreducible(g):
        raise PreconditionError("primitivity is defined for irreducible polynomials")
    g = g.monic()
    if g == Poly.x(g.field):
        raise PreconditionError("x has no primitive root")
    d = g.degree
    q = g.field.q
    if q**d - 1 >= ORDER_LIMIT:
        raise SizeLimitError(f"group order {q}^{d}-1 exceeds the 64-bit guardrail")
    return _order_of_x_mod_irreducible(g) == q**d - 1


def extend_by_primitive(f: Poly, g: Poly) -> ConstructionStep:
    """Split the composition of f with the linearized form of a primitive g
    into its degree-n factor and its degree n(q^d - 1) factor.

    The degree-n factor is gcd(f(L_g), x^(q^n) - x), computed through a
    modular power of x so the huge q^n-degree polynomial never appears."""
    field = f.field
    if g.field != field:
        raise FieldMismatchError("f and g must share a field")

    def fail(condition: str):
        raise PreconditionError(f"extend_by_primitive: {condition}")

    if f.is_zero or f.degree < 1 or not f.is_monic or not is_irreducible(f):
        fail("f must be monic irreducible")
    n = f.degree
    if g.is_zero or g.degree < 1 or not g.is_monic or not is_irreducible(g):
        fail("g must be monic irreducible")
    x = Poly.x(field)
    one = Poly.one(field)
    if g == x or g == x - one:
        fail("g must differ from x and x-1")
    if not is_primitive(g):
        fail("g is not primitive")
    d = g.degree
    q = field.q
    if math.gcd(n, q**d - 1) != 1:
        fail(f"gcd(deg f, q^d - 1) = gcd({n}, {q**d - 1}) != 1")
    F = compose_f_Lg(f, g)
    ctx = _ModContext(F)
    t = ctx.reduce(x)
    for _ in range(n * field.k):
        t = ctx.pow(t, field.p)
    G1 = gcd(t - x, F)
    G2 = (F // G1).monic()
    if G1.degree != n or G2.degree != n * (q**d - 1):
        raise InternalCheckError(
            f"unexpected split degrees {G1.degree}, {G2.degree}"
        )
    if not is_irreducible(G1) or not is_irreducible(G2):
        raise InternalCheckError("a construction factor failed certification")
    return ConstructionStep(f, g, G1, G2)


def iterate_f2(f: Poly, gs) -> list[ConstructionStep]:
    """Chain the construction over GF(2) through primitive polynomials of
    pairwise coprime degrees d_i >= 2 with gcd(deg f, 2^d_i - 1) = 1.

    Output degrees are n, n(2^d_1 - 1), n(2^d_1 - 1)(2^d_2 - 1), ...
    An empty chain yields a single trivial step carrying f through."""
    field = f.field
    if field.q != 2:
        raise PreconditionError("the iterated construction runs over GF(2)")
    if f.is_zero or f.degree < 1 or not f.is_monic or not is_irreducible(f):
        raise PreconditionError("f must be monic irreducible")
    gs = list(gs)
    if not gs:
        one = Poly.one(field)
        return [ConstructionStep(f, one, one, f)]
    degrees = []
    for i, g in enumerate(gs):
        if g.field != field:
            raise FieldMismatchError(f"chain entry {i} lives over a different field")
        if g.is_zero or g.degree < 2:
            raise PreconditionError(f"chain entry {i} must have degree >= 2")
        degrees.append(g.degree)
    n = f.degree
    for i, di in enumerate(degrees):
        if math.gcd(n, 2**di - 1) != 1:
            raise PreconditionError(
                f"gcd(deg f, 2^{di} - 1) != 1 at chain entry {i}"
            )
    for i in range(len(degrees)):
        for j in range(i + 1, len(degrees)):
            if math.gcd(degrees[i], degrees[j]) != 1:
                raise PreconditionError(
                    f"chain degrees {degrees[i]} and {degrees[j]} "
                    f"(entries {i}, {j}) are not coprime"
                )
            # the chained moduli must stay coprime for every later gcd check
            if math.gcd(2 ** degrees[i] - 1, 2 ** degrees[j] - 1) != 1:
                raise InternalCheckError("moduli 2^d - 1 are not pairwise coprime")
    steps = []
    current = f
    for g in gs:
        step = extend_by_primitive(current, g)
        steps.append(step)
        current = step.g2
    return steps
