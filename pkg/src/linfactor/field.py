"""Arithmetic in GF(p) and GF(p^k), plus the small-integer number theory
(factorization, totients, multiplicative orders) the rest of the package
leans on.

Fields are immutable and hashable.  Desk-scale guardrails apply throughout:
q = p^k is capped at 2^20 and any modulus fed to an order computation must
stay below 2^64, which keeps every computation exact in machine integers.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import (
    FieldMismatchError,
    InternalCheckError,
    PreconditionError,
    SizeLimitError,
)

MAX_FIELD_SIZE = 1 << 20
ORDER_LIMIT = 1 << 64

# ---------------------------------------------------------------------------
# integer number theory

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_TRIAL_BOUND = 10**6


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed witness set is exact below 2^64."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # n odd, composite; returns a nontrivial divisor.  Floyd cycle detection
    # with a deterministic sweep of polynomial offsets.
    for c in range(1, 1000):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise InternalCheckError(f"rho failed to split {n}")


@functools.lru_cache(maxsize=None)
def integer_factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...) with primes increasing.

    Trial division up to 10^6, then Pollard rho for what remains.
    """
    if n < 1:
        raise PreconditionError("integer_factor requires n >= 1")
    if n >= ORDER_LIMIT:
        raise SizeLimitError(f"{n} exceeds the 64-bit factorization guardrail")
    out: dict[int, int] = {}
    for d in (2, 3, 5):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 7
    while n > 1 and d * d <= n and d <= _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            stack = [n]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    out[m] = out.get(m, 0) + 1
                else:
                    f = _pollard_rho(m)
                    stack.append(f)
                    stack.append(m // f)
    return tuple(sorted(out.items()))


def integer_phi(n: int) -> int:
    """Euler's totient, computed from the prime factorization."""
    result = 1
    for prime, exp in integer_factor(n):
        result *= prime ** (exp - 1) * (prime - 1)
    return result


def integer_divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    divs = [1]
    for prime, exp in integer_factor(n):
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def ord_mod(a: int, m: int) -> int:
    """Least k > 0 with a^k = 1 (mod m); requires gcd(a, m) = 1."""
    if m < 1:
        raise PreconditionError("modulus must be >= 1")
    if m == 1:
        return 1
    a %= m
    if math.gcd(a, m) != 1:
        raise PreconditionError(f"{a} is not coprime to {m}")
    e = integer_phi(m)
    for prime, _ in integer_factor(e):
        while e % prime == 0 and pow(a, e // prime, m) == 1:
            e //= prime
    return e


# ---------------------------------------------------------------------------
# GF(p^k)


class FieldElement:
    """An element of a FiniteField, stored as a little-endian tuple of
    coefficients in the generator t.  Immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FiniteField", coeffs: tuple[int, ...]):
        # trusted constructor; go through field(...) to coerce values
        self.field = field
        self.coeffs = coeffs

    # -- predicates ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- conversions --------------------------------------------------------

    def to_int(self) -> int:
        """Encode as an integer in [0, q) using base-p digits; follows the
        canonical element order 0, 1, ..., p-1, t, t+1, ..."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field._mul_t(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.field, self.field._inv_t(self.coeffs))

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        base = self
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: digits mod p, with t-powers descending."""
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.field.k - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tpow = "t" if i == 1 else f"t^{i}"
                parts.append(tpow if c == 1 else f"{c}*{tpow}")
        return "+".join(parts)

    def __repr__(self):
        return f"<{self.to_text()} in {self.field.spec()}>"

    def __str__(self):
        return self.to_text()


class FiniteField:
    """GF(p^k).  For k > 1 the field is GF(p)[t]/(modulus) with a monic
    irreducible modulus, verified at construction.

    When no modulus is supplied one is found by scanning monic polynomials
    of degree k in increasing coefficient order, so fields are reproducible.
    """

    __slots__ = ("p", "k", "q", "modulus", "_treduce_rows", "_treduce_mat", "_hash",
                 "zero", "one")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise PreconditionError(f"characteristic {p} is not prime")
        if k < 1:
            raise PreconditionError("extension degree must be >= 1")
        q = p**k
        if q > MAX_FIELD_SIZE:
            raise SizeLimitError(f"field size {q} exceeds the 2^20 guardrail")
        self.p = p
        self.k = k
        self.q = q
        if k == 1:
            if modulus is not None:
                raise PreconditionError("prime fields take no modulus")
            self.modulus = None
            self._treduce_rows = ()
        else:
            if modulus is None:
                modulus = _first_irreducible_modulus(p, k)
            else:
                modulus = tuple(int(c) % p for c in modulus)
                if len(modulus) != k + 1 or modulus[-1] != 1:
                    raise PreconditionError(
                        f"modulus must be monic of degree {k}"
                    )
                if not _modulus_is_irreducible(p, modulus):
                    raise PreconditionError(
                        "modulus is not irreducible over the prime field"
                    )
            self.modulus = modulus
            # rows for t^k .. t^(2k-2) reduced mod the modulus
            rows = []
            cur = [(-modulus[i]) % p for i in range(k)]
            rows.append(tuple(cur))
            for _ in range(k - 2):
                cur = [0] + cur
                over = cur.pop()
                cur = [(cur[i] + over * rows[0][i]) % p for i in range(k)]
                rows.append(tuple(cur))
            self._treduce_rows = tuple(rows)
        self._treduce_mat = np.array(
            self._treduce_rows, dtype=np.int64
        ).reshape(max(self.k - 1, 0), self.k)
        self._hash = hash((self.p, self.k, self.modulus))
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteField({self.spec()!r})"

    def spec(self) -> str:
        """Field spec text, e.g. 'p=5' or 'p=2,k=2,mod=t^2+t+1'."""
        if self.k == 1:
            return f"p={self.p}"
        return f"p={self.p},k={self.k},mod={_modulus_text(self.modulus)}"

    # -- element constructors ------------------------------------------------

    def __call__(self, value) -> FieldElement:
        """Coerce an int (embedded via the prime subfield), a coefficient
        sequence, or an element of this same field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, (int(value) % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.k:
            raise PreconditionError(f"at most {self.k} coefficients expected")
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    def element_from_int(self, n: int) -> FieldElement:
        """Inverse of FieldElement.to_int: decode base-p digits."""
        if not 0 <= n < self.q:
            raise PreconditionError(f"encoded element must lie in [0, {self.q})")
        digits = []
        for _ in range(self.k):
            digits.append(n % self.p)
            n //= self.p
        return FieldElement(self, tuple(digits))

    def generator(self) -> FieldElement:
        """The generator t of the extension (k >= 2 only)."""
        if self.k == 1:
            raise PreconditionError("prime fields have no generator t")
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self):
        """All q elements in canonical order: 0, 1, ..., p-1, then t-ascending."""
        for n in range(self.q):
            yield self.element_from_int(n)

    # -- tuple-level arithmetic (internal) ------------------------------------

    def _mul_t(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for idx in range(2 * k - 2, k - 1, -1):
            c = prod[idx] % p
            if c:
                row = self._treduce_rows[idx - k]
                for i in range(k):
                    prod[i] += c * row[i]
        return tuple(prod[i] % p for i in range(k))

    def _t_times(self, a: tuple[int, ...]) -> tuple[int, ...]:
        # multiply by the generator t
        p, k = self.p, self.k
        over = a[k - 1]
        shifted = (0,) + a[: k - 1]
        if not over:
            return shifted
        row = self._treduce_rows[0]
        return tuple((shifted[i] + over * row[i]) % p for i in range(k))

    def _inv_t(self, a: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (pow(a[0], -1, p),)
        # extended Euclid in GF(p)[t] against the modulus
        r0 = list(self.modulus)
        r1 = list(a)
        s0, s1 = [0], [1]

        def deg(v):
            d = len(v) - 1
            while d >= 0 and v[d] == 0:
                d -= 1
            return d

        while deg(r1) > 0:
            d0, d1 = deg(r0), deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            factor = r0[deg(r0)] * pow(r1[deg(r1)], -1, p) % p
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] = (r0[i + shift] - factor * r1[i]) % p
            s1_len = len(s1) + shift
            if len(s0) < s1_len:
                s0 = s0 + [0] * (s1_len - len(s0))
            for i in range(len(s1)):
                s0[i + shift] = (s0[i + shift] - factor * s1[i]) % p
            if deg(r0) < deg(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        d1 = deg(r1)
        if d1 < 0:
            raise ZeroDivisionError("zero has no inverse")
        c = pow(r1[0], -1, p)
        out = [x * c % p for x in s1]
        out = out[:k] + [0] * max(0, k - len(out))
        return tuple(out[:k])


def _modulus_text(modulus: tuple[int, ...]) -> str:
    parts = []
    for e in range(len(modulus) - 1, -1, -1):
        c = modulus[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        else:
            tp = "t" if e == 1 else f"t^{e}"
            parts.append(tp if c == 1 else f"{c}*{tp}")
    return "+".join(parts) if parts else "0"


def _modulus_is_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    # verified with the polynomial irreducibility oracle over GF(p)
    from . import poly as _poly

    base = FiniteField(p)
    f = _poly.Poly.from_coeffs(base, modulus)
    return _poly.is_irreducible(f)


@functools.lru_cache(maxsize=None)
def _first_irreducible_modulus(p: int, k: int) -> tuple[int, ...]:
    # scan monic degree-k polynomials in increasing coefficient order
    for m in range(p**k):
        digits = []
        n = m
        for _ in range(k):
            digits.append(n % p)
            n //= p
        candidate = tuple(digits) + (1,)
        if _modulus_is_irreducible(p, candidate):
            return candidate
    raise InternalCheckError(f"no irreducible of degree {k} over GF({p})")


def parse_field_spec(text: str) -> FiniteField:
    """Parse a field spec: 'p=5', 'p=2,k=4' or 'p=2,k=2,mod=t^2+t+1'."""
    from .errors import ParseError
    from . import poly as _poly

    p = None
    k = 1
    mod_text = None
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ParseError(f"expected key=value, got {chunk!r}", text, text.find(chunk))
        key, _, val = chunk.partition("=")
        key = key.strip()
        val = val.strip()
        if key == "p":
            p = int(val)
        elif key == "k":
            k = int(val)
        elif key == "mod":
            mod_text = val
        else:
            raise ParseError(f"unknown field parameter {key!r}", text, text.find(chunk))
    if p is None:
        raise ParseError("field spec needs p=<prime>", text, 0)
    if mod_text is None:
        return FiniteField(p, k)
    base = FiniteField(p)
    mod_poly = _poly.parse_poly(base, mod_text, var="t")
    coeffs = tuple(c.coeffs[0] for c in mod_poly.coeffs)
    if k == 1 and len(coeffs) > 1:
        k = len(coeffs) - 1
    return FiniteField(p, k, coeffs)
