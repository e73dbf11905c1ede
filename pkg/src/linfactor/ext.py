"""Extension fields GF(q^n) = GF(q)[z]/(f) for a monic irreducible f, their
elements, Frobenius maps, and multiplicative orders.

Only two levels of extension exist in this package: GF(p) -> GF(q) inside
FiniteField, and GF(q) -> GF(q^n) here.  An ExtElement wraps its reduced
representative as a Poly over the base field.
"""

from __future__ import annotations

from .errors import FieldMismatchError, PreconditionError, SizeLimitError
from .field import FieldElement, FiniteField, ORDER_LIMIT, integer_factor
from .poly import Poly, _ModContext, is_irreducible

_ENUM_LIMIT = 10**6


class ExtField:
    """GF(q^n) presented as GF(q)[z]/(f) for a monic irreducible f over GF(q)."""

    __slots__ = ("base", "modulus", "degree", "_ctx", "_hash")

    def __init__(self, modulus: Poly):
        if not isinstance(modulus.field, FiniteField):
            raise PreconditionError("extension base must be a FiniteField")
        if modulus.is_zero or modulus.degree < 1:
            raise PreconditionError("extension modulus must have degree >= 1")
        if not modulus.is_monic:
            raise PreconditionError("extension modulus must be monic")
        if not is_irreducible(modulus):
            raise PreconditionError("extension modulus is not irreducible")
        self.base = modulus.field
        self.modulus = modulus
        self.degree = modulus.degree
        self._ctx = _ModContext(modulus)
        self._hash = hash((self.base, modulus))

    @property
    def order(self) -> int:
        return self.base.q**self.degree

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and self.base == other.base
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ExtField({self.modulus!r})"

    # -- element constructors -------------------------------------------------

    def element(self, value) -> "ExtElement":
        """Coerce a Poly over the base (reduced mod f), a FieldElement, an
        int, or a coefficient sequence."""
        if isinstance(value, ExtElement):
            if value.ext != self:
                raise FieldMismatchError("element belongs to a different extension")
            return value
        if isinstance(value, Poly):
            if value.field != self.base:
                raise FieldMismatchError("representative over the wrong base field")
            if not value.is_zero and value.degree >= self.degree:
                value = value % self.modulus
            return ExtElement(self, value)
        if isinstance(value, (int, FieldElement)):
            return ExtElement(self, Poly.from_coeffs(self.base, [self.base(value)]))
        return ExtElement(self, Poly.from_coeffs(self.base, list(value)))

    @property
    def zero(self) -> "ExtElement":
        return ExtElement(self, Poly.zero(self.base))

    @property
    def one(self) -> "ExtElement":
        return ExtElement(self, Poly.one(self.base))

    @property
    def generator(self) -> "ExtElement":
        """The residue of z, a root of the defining polynomial."""
        return ExtElement(self, Poly.x(self.base))

    def elements(self):
        """All q^n elements, ordered by base-q digits of the z-coordinates."""
        if self.order > _ENUM_LIMIT:
            raise SizeLimitError("extension too large to enumerate")
        q = self.base.q
        for m in range(self.order):
            coeffs = []
            n = m
            for _ in range(self.degree):
                coeffs.append(self.base.element_from_int(n % q))
                n //= q
            yield ExtElement(self, Poly.from_coeffs(self.base, coeffs))

    def evaluate(self, poly: Poly, a: "ExtElement") -> "ExtElement":
        """Evaluate a base-field polynomial at an element of this extension."""
        if poly.field != self.base:
            raise FieldMismatchError("polynomial over the wrong base field")
        acc = self.zero
        for i in range(poly._arr.shape[0] - 1, -1, -1):
            acc = acc * a + poly.coeff(i)
        return acc


class ExtElement:
    """An element of an ExtField, stored as its reduced z-representative."""

    __slots__ = ("ext", "value")

    def __init__(self, ext: ExtField, value: Poly):
        # trusted constructor; use ExtField.element to coerce
        self.ext = ext
        self.value = value

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        """Exactly n base-field coefficients, little-endian in z."""
        n = self.ext.degree
        return tuple(self.value.coeff(i) for i in range(n))

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise FieldMismatchError("elements of different extensions")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ext.element(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.ext, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.ext, self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return ExtElement(self.ext, -self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ExtElement(self.ext, self.ext._ctx.mul(self.value, o.value))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ExtElement":
        if e < 0:
            raise PreconditionError("negative powers of extension elements")
        return ExtElement(self.ext, self.ext._ctx.pow(self.value, e))

    # -- comparisons and rendering ---------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.value == o.value

    def __hash__(self):
        return hash((self.ext, self.value))

    def to_text(self) -> str:
        return self.value.to_text(var="z")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.to_text()} in {self.ext!r}>"


def frobenius(a: ExtElement, i: int) -> ExtElement:
    """The conjugate a^(q^i), by i applications of the q-power map."""
    if i < 0:
        raise PreconditionError("Frobenius power must be nonnegative")
    q = a.ext.base.q
    b = a
    for _ in range(i):
        b = b**q
    return b


def mult_order(a: ExtElement) -> int:
    """Multiplicative order of a nonzero element; divides q^n - 1."""
    if a.is_zero:
        raise PreconditionError("zero has no multiplicative order")
    q = a.ext.base.q
    n = a.ext.degree
    if q**n - 1 >= ORDER_LIMIT:
        raise SizeLimitError(f"group order {q}^{n}-1 exceeds the 64-bit guardrail")
    group = q**n - 1
    e = group
    for prime, _ in integer_factor(group):
        while e % prime == 0 and (a ** (e // prime)) == a.ext.one:
            e //= prime
    return e
