"""Dense univariate polynomials over a FiniteField, with a complete
factorization oracle and the order/totient machinery built on top of it.

Coefficients live in a read-only (n, k) int64 array, little-endian by
exponent; row i holds the t-coordinates of the coefficient of x^i.  The
heavy loops (convolution, modular reduction) stay inside numpy so the
brute-force oracle is fast enough for exhaustive sweeps, while every result
remains exact: all intermediate values fit comfortably in 64-bit integers
under the package guardrails (q <= 2^20, at most 10^5 coefficients).

Factorization is squarefree decomposition, then distinct-degree splitting,
then seeded equal-degree splitting; the factor list is sorted canonically so
output never depends on the seed.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import os
import random
import re

import numpy as np

from .errors import (
    FieldMismatchError,
    ParseError,
    PreconditionError,
    SizeLimitError,
)
from .field import FieldElement, FiniteField, ORDER_LIMIT, integer_factor

DEFAULT_COEFF_LIMIT = 100_000
DIVISOR_LIMIT = 10**6


def coefficient_limit() -> int:
    """Active cap on dense coefficient vectors; LINFACTOR_MAX_COEFFS overrides."""
    raw = os.environ.get("LINFACTOR_MAX_COEFFS")
    if raw is None:
        return DEFAULT_COEFF_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError("LINFACTOR_MAX_COEFFS must be an integer") from None


# ---------------------------------------------------------------------------
# array-level helpers (coefficients as (n, k) int64 arrays)


def _normalize(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[0]
    while n > 0 and not arr[n - 1].any():
        n -= 1
    return arr[:n]


def _conv_arrays(field: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Full product of two nonempty coefficient arrays, reduced mod (p, modulus)."""
    p, k = field.p, field.k
    if k == 1:
        out = np.convolve(A[:, 0], B[:, 0]) % p
        return out.reshape(-1, 1)
    wide = np.zeros((A.shape[0] + B.shape[0] - 1, 2 * k - 1), dtype=np.int64)
    for u in range(k):
        Au = A[:, u]
        if not Au.any():
            continue
        for v in range(k):
            Bv = B[:, v]
            if not Bv.any():
                continue
            wide[:, u + v] += np.convolve(Au, Bv)
    wide %= p
    low = wide[:, :k] + wide[:, k:] @ field._treduce_mat
    return low % p


def _scale_arr(field: FiniteField, A: np.ndarray, c: tuple[int, ...]) -> np.ndarray:
    """Multiply every coefficient of A by the element with coordinates c."""
    p, k = field.p, field.k
    if k == 1:
        return (A * c[0]) % p
    rows = []
    cur = c
    for _ in range(k):
        rows.append(cur)
        cur = field._t_times(cur)
    M = np.array(rows, dtype=np.int64)
    return (A @ M) % p


def _gen_scale(field: FiniteField, A: np.ndarray) -> np.ndarray:
    """Multiply every coefficient of A by the generator t (k >= 2)."""
    p, k = field.p, field.k
    out = np.zeros_like(A)
    out[:, 1:] = A[:, :-1]
    over = A[:, k - 1]
    if over.any():
        out = (out + np.outer(over, field._treduce_mat[0])) % p
    return out


def _divmod_arrays(field: FiniteField, A: np.ndarray, B: np.ndarray):
    lb = B.shape[0]
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    la = A.shape[0]
    k = field.k
    p = field.p
    if la < lb:
        return np.zeros((0, k), dtype=np.int64), A.copy()
    inv_lead = field._inv_t(tuple(int(v) for v in B[-1]))
    R = A.copy()
    Q = np.zeros((la - lb + 1, k), dtype=np.int64)
    for i in range(la - lb, -1, -1):
        top = tuple(int(v) for v in R[i + lb - 1])
        if not any(top):
            continue
        c = field._mul_t(top, inv_lead)
        Q[i] = c
        R[i : i + lb] = (R[i : i + lb] - _scale_arr(field, B, c)) % p
    return _normalize(Q), _normalize(R[: lb - 1])


# ---------------------------------------------------------------------------
# the polynomial type


class Poly:
    """Immutable dense polynomial over a FiniteField.

    deg(0) is minus infinity (float('-inf')); nonzero polynomials carry no
    trailing zero coefficients, and the monic normal form is what comparisons
    and factor listings use.
    """

    __slots__ = ("field", "_arr", "_hash")

    def __init__(self, field: FiniteField, coeffs=()):
        built = Poly.from_coeffs(field, coeffs)
        self.field = field
        self._arr = built._arr
        self._hash = None

    @classmethod
    def _make(cls, field: FiniteField, arr: np.ndarray) -> "Poly":
        obj = cls.__new__(cls)
        obj.field = field
        trimmed = _normalize(np.asarray(arr, dtype=np.int64))
        copy = np.ascontiguousarray(trimmed)
        copy.setflags(write=False)
        obj._arr = copy
        obj._hash = None
        return obj

    @classmethod
    def from_coeffs(cls, field: FiniteField, coeffs) -> "Poly":
        rows = [field(c).coeffs for c in coeffs]
        arr = np.array(rows, dtype=np.int64).reshape(len(rows), field.k)
        return cls._make(field, arr)

    @classmethod
    def zero(cls, field: FiniteField) -> "Poly":
        return cls._make(field, np.zeros((0, field.k), dtype=np.int64))

    @classmethod
    def one(cls, field: FiniteField) -> "Poly":
        return cls.from_coeffs(field, [1])

    @classmethod
    def x(cls, field: FiniteField) -> "Poly":
        return cls.from_coeffs(field, [0, 1])

    @classmethod
    def monomial(cls, field: FiniteField, exponent: int, coeff=1) -> "Poly":
        if exponent + 1 > coefficient_limit():
            raise SizeLimitError(
                f"monomial degree {exponent} exceeds the coefficient guardrail"
            )
        c = field(coeff)
        arr = np.zeros((exponent + 1, field.k), dtype=np.int64)
        arr[exponent] = c.coeffs
        return cls._make(field, arr)

    @classmethod
    def parse(cls, field: FiniteField, text: str, var: str = "x") -> "Poly":
        return parse_poly(field, text, var)

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        n = self._arr.shape[0]
        return n - 1 if n else float("-inf")

    @property
    def is_zero(self) -> bool:
        return self._arr.shape[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def lead(self) -> FieldElement:
        if self.is_zero:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return FieldElement(self.field, tuple(int(v) for v in self._arr[-1]))

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.lead == self.field.one

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < self._arr.shape[0]:
            return FieldElement(self.field, tuple(int(v) for v in self._arr[i]))
        return self.field.zero

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(self.coeff(i) for i in range(self._arr.shape[0]))

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self * self.lead.inverse()

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.from_coeffs(self.field, [self.field(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._arr, o._arr
        n = max(a.shape[0], b.shape[0])
        out = np.zeros((n, self.field.k), dtype=np.int64)
        out[: a.shape[0]] += a
        out[: b.shape[0]] += b
        return Poly._make(self.field, out % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._arr, o._arr
        n = max(a.shape[0], b.shape[0])
        out = np.zeros((n, self.field.k), dtype=np.int64)
        out[: a.shape[0]] += a
        out[: b.shape[0]] -= b
        return Poly._make(self.field, out % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Poly._make(self.field, (-self._arr) % self.field.p)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            if self.is_zero or other.is_zero:
                return Poly.zero(self.field)
            return Poly._make(
                self.field, _conv_arrays(self.field, self._arr, other._arr)
            )
        if isinstance(other, (int, FieldElement)):
            c = self.field(other)
            if c.is_zero or self.is_zero:
                return Poly.zero(self.field)
            return Poly._make(self.field, _scale_arr(self.field, self._arr, c.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise PreconditionError("negative polynomial powers are not defined")
        if e == 0:
            return Poly.one(self.field)
        if not self.is_zero and self.degree * e + 1 > coefficient_limit():
            raise SizeLimitError(
                f"power of degree {self.degree * e} exceeds the coefficient guardrail"
            )
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        q, r = _divmod_arrays(self.field, self._arr, o._arr)
        return Poly._make(self.field, q), Poly._make(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- substitutions -------------------------------------------------------

    def derivative(self) -> "Poly":
        n = self._arr.shape[0]
        if n <= 1:
            return Poly.zero(self.field)
        mult = (np.arange(1, n, dtype=np.int64) % self.field.p)[:, None]
        return Poly._make(self.field, (self._arr[1:] * mult) % self.field.p)

    def evaluate(self, value) -> FieldElement:
        c = self.field(value)
        acc = self.field.zero
        for i in range(self._arr.shape[0] - 1, -1, -1):
            acc = acc * c + self.coeff(i)
        return acc

    def shifted(self, a) -> "Poly":
        """The substituted polynomial self(x + a)."""
        a = self.field(a)
        if self.is_zero or a.is_zero:
            return self
        xa = Poly.from_coeffs(self.field, [a, self.field.one])
        result = Poly.zero(self.field)
        for i in range(self._arr.shape[0] - 1, -1, -1):
            result = result * xa + self.coeff(i)
        return result

    def dilate(self, m: int) -> "Poly":
        """Substitute x -> x^m (for m >= 1)."""
        if m < 1:
            raise PreconditionError("dilation exponent must be >= 1")
        if self.is_zero or m == 1:
            return self
        n = self._arr.shape[0]
        if (n - 1) * m + 1 > coefficient_limit():
            raise SizeLimitError(
                f"dilated degree {(n - 1) * m} exceeds the coefficient guardrail"
            )
        out = np.zeros(((n - 1) * m + 1, self.field.k), dtype=np.int64)
        out[::m] = self._arr
        return Poly._make(self.field, out)

    # -- comparisons and rendering -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.field == other.field
                and self._arr.shape == other._arr.shape
                and bool((self._arr == other._arr).all())
            )
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self._arr.shape[0], self._arr.tobytes()))
        return self._hash

    def sort_key(self):
        """Canonical ordering key: (degree, coefficients from the top down)."""
        n = self._arr.shape[0]
        encoded = tuple(self.coeff(i).to_int() for i in range(n - 1, -1, -1))
        return (n - 1, encoded)

    def to_text(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self._arr.shape[0] - 1, -1, -1):
            c = self.coeff(e)
            if c.is_zero:
                continue
            ct = c.to_text()
            if e == 0:
                parts.append(ct)
                continue
            xs = var if e == 1 else f"{var}^{e}"
            if ct == "1":
                parts.append(xs)
            elif "+" in ct:
                parts.append(f"({ct})*{xs}")
            else:
                parts.append(f"{ct}*{xs}")
        return "+".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.to_text()} over {self.field.spec()}>"


def _same_field(a: Poly, b: Poly):
    if a.field != b.field:
        raise FieldMismatchError("polynomials over different fields")


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    _same_field(a, b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def lcm(a: Poly, b: Poly) -> Poly:
    """Monic least common multiple; zero if either input is zero."""
    _same_field(a, b)
    if a.is_zero or b.is_zero:
        return Poly.zero(a.field)
    return ((a * b) // gcd(a, b)).monic()


# ---------------------------------------------------------------------------
# fast repeated reduction modulo a fixed polynomial


class _ModContext:
    """Repeated reduction modulo a fixed monic polynomial.

    For small moduli a dense table of x^(n+i) * t^u mod f is precomputed so
    each reduction becomes a single exact integer matrix product; larger
    moduli fall back to long division.
    """

    __slots__ = ("field", "modulus", "n", "_table")

    _TABLE_LIMIT = 2048  # maximum n*k for the dense table

    def __init__(self, modulus: Poly):
        if modulus.is_zero or modulus.degree < 1:
            raise PreconditionError("modulus must have degree >= 1")
        if not modulus.is_monic:
            modulus = modulus.monic()
        self.field = modulus.field
        self.modulus = modulus
        n = modulus.degree
        self.n = n
        field = self.field
        k, p = field.k, field.p
        if n >= 2 and n * k <= self._TABLE_LIMIT:
            rows = np.zeros(((n - 1) * k, n * k), dtype=np.int64)
            base = (-modulus._arr[:n]) % p  # x^n mod f
            pw = base
            for i in range(n - 1):
                if i > 0:
                    top = tuple(int(v) for v in pw[n - 1])
                    shifted = np.zeros((n, k), dtype=np.int64)
                    shifted[1:] = pw[: n - 1]
                    pw = shifted
                    if any(top):
                        pw = (pw + _scale_arr(field, base, top)) % p
                cur = pw
                for u in range(k):
                    rows[i * k + u] = cur.reshape(-1)
                    if u + 1 < k:
                        cur = _gen_scale(field, cur)
            self._table = rows
        else:
            self._table = None

    def reduce(self, a: Poly) -> Poly:
        arr = a._arr
        n, k = self.n, self.field.k
        if arr.shape[0] <= n:
            return a
        if self._table is None or arr.shape[0] > 2 * n - 1:
            _, r = _divmod_arrays(self.field, arr, self.modulus._arr)
            return Poly._make(self.field, r)
        low = arr[:n]
        high = arr[n:]
        m = high.shape[0]
        folded = (high.reshape(-1) @ self._table[: m * k]).reshape(n, k)
        return Poly._make(self.field, (low + folded) % self.field.p)

    def mul(self, a: Poly, b: Poly) -> Poly:
        if a.is_zero or b.is_zero:
            return Poly.zero(self.field)
        prod = _conv_arrays(self.field, a._arr, b._arr)
        return self.reduce(Poly._make(self.field, prod))

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            raise PreconditionError("negative exponent")
        result = self.reduce(Poly.one(self.field))
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result


# ---------------------------------------------------------------------------
# factorization oracle


@dataclasses.dataclass(frozen=True)
class Factorization:
    """unit * product(poly^mult) reproduces the factored polynomial exactly."""

    unit: FieldElement
    factors: tuple[tuple[Poly, int], ...]

    def product(self) -> Poly:
        result = Poly.from_coeffs(self.unit.field, [self.unit])
        for poly, mult in self.factors:
            result = result * poly**mult
        return result

    def degree_histogram(self) -> dict[int, int]:
        """Map degree -> number of irreducible factors, counted with multiplicity."""
        out: dict[int, int] = {}
        for poly, mult in self.factors:
            out[poly.degree] = out.get(poly.degree, 0) + mult
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _random_poly(field: FiniteField, rng: random.Random, max_degree: int) -> Poly:
    coeffs = [field.element_from_int(rng.randrange(field.q)) for _ in range(max_degree + 1)]
    return Poly.from_coeffs(field, coeffs)


def _pth_root(f: Poly) -> Poly:
    # f has zero derivative, so it is a polynomial in x^p with p-th power
    # coefficients; invert the Frobenius on each surviving coefficient.
    field = f.field
    p = field.p
    inv_frob = field.p ** (field.k - 1)
    coeffs = []
    for i in range(0, f._arr.shape[0], p):
        c = f.coeff(i)
        coeffs.append(c if field.k == 1 else c**inv_frob)
    return Poly.from_coeffs(field, coeffs)


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    # classic characteristic-p squarefree decomposition; returns pairwise
    # coprime monic squarefree parts with their multiplicities
    out: list[tuple[Poly, int]] = []
    e = 1
    p = f.field.p
    while f.degree >= 1:
        df = f.derivative()
        if df.is_zero:
            f = _pth_root(f)
            e *= p
            continue
        g = gcd(f, df)
        w = f // g
        i = 1
        while w.degree >= 1:
            y = gcd(w, g)
            z = w // y
            if z.degree >= 1:
                out.append((z.monic(), i * e))
            w = y
            g = g // y
            i += 1
        f = g
    return out


def _distinct_degree_parts(f: Poly) -> list[tuple[int, Poly]]:
    # f monic squarefree; returns (d, product of the irreducible factors of degree d)
    out: list[tuple[int, Poly]] = []
    v = f
    field = f.field
    x = Poly.x(field)
    q = field.q
    if v.degree == 1:
        return [(1, v)]
    ctx = _ModContext(v)
    h = ctx.reduce(x)
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        h = ctx.pow(h, q)
        g = gcd(h - x, v)
        if g.degree >= 1:
            v = v // g
            out.append((d, g))
            if v.degree >= 2 * (d + 1):
                ctx = _ModContext(v)
                h = h % v
            else:
                break
    if v.degree >= 1:
        out.append((v.degree, v))
    return out


def _equal_degree_split(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    # f monic squarefree with all irreducible factors of degree d
    if f.degree == d:
        return [f]
    field = f.field
    n = f.degree
    q = field.q
    ctx = _ModContext(f)
    one = Poly.one(field)
    split = None
    while split is None:
        r = _random_poly(field, rng, n - 1)
        if r.degree < 1:
            continue
        c = gcd(r, f)
        if 1 <= c.degree < n:
            split = c
            continue
        if q % 2 == 1:
            s = ctx.pow(r, (q**d - 1) // 2) - one
            c = gcd(s, f)
        else:
            # absolute trace map down to GF(2)
            acc = ctx.reduce(r)
            cur = acc
            for _ in range(d * field.k - 1):
                cur = ctx.mul(cur, cur)
                acc = acc + cur
            c = gcd(acc, f)
        if 1 <= c.degree < n:
            split = c
    a = split.monic()
    b = (f // split).monic()
    return _equal_degree_split(a, d, rng) + _equal_degree_split(b, d, rng)


def factor(f: Poly, seed: int = 0) -> Factorization:
    """Complete factorization into monic irreducibles.

    Deterministic for a fixed seed; the sorted factor list makes the output
    independent of the seed as well.
    """
    if f.is_zero:
        raise PreconditionError("cannot factor the zero polynomial")
    unit = f.lead
    items: dict[Poly, int] = {}
    work = f.monic()
    if work.degree >= 1:
        rng = random.Random(seed)
        for sq, mult in _squarefree_parts(work):
            for d, prod in _distinct_degree_parts(sq):
                for irr in _equal_degree_split(prod, d, rng):
                    items[irr] = items.get(irr, 0) + mult
    ordered = tuple(sorted(items.items(), key=lambda kv: kv[0].sort_key()))
    return Factorization(unit, ordered)


def is_irreducible(f: Poly) -> bool:
    """Irreducibility by Rabin's test (Frobenius fixed points and gcds)."""
    if f.is_zero or f.degree < 1:
        raise PreconditionError("irreducibility is defined for degree >= 1 only")
    n = f.degree
    if n == 1:
        return True
    field = f.field
    q = field.q
    x = Poly.x(field)
    ctx = _ModContext(f)
    needed = {n // r for r, _ in integer_factor(n)}
    checkpoints = {}
    h = ctx.reduce(x)
    for j in range(1, n + 1):
        h = ctx.pow(h, q)
        if j in needed:
            checkpoints[j] = h
    if h != ctx.reduce(x):
        return False
    for hj in checkpoints.values():
        if gcd(hj - x, f).degree != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# derived arithmetic functions


def rad(f: Poly) -> Poly:
    """Squarefree part: the product of the distinct monic irreducible divisors."""
    if f.is_zero:
        raise PreconditionError("rad of the zero polynomial is undefined")
    if f.degree == 0:
        return Poly.one(f.field)
    result = Poly.one(f.field)
    for irr, _ in factor(f).factors:
        result = result * irr
    return result


def nu(f: Poly) -> int:
    """Largest multiplicity among the irreducible divisors; 0 for constants."""
    if f.is_zero:
        raise PreconditionError("nu of the zero polynomial is undefined")
    if f.degree == 0:
        return 0
    return max(e for _, e in factor(f).factors)


def phi_q(f: Poly) -> int:
    """Order of the unit group of F_q[x]/(f); 1 for constants.

    Multiplicative over the factorization, with q^(d(s-1)) * (q^d - 1) at an
    irreducible factor of degree d and multiplicity s.
    """
    if f.is_zero:
        raise PreconditionError("phi_q of the zero polynomial is undefined")
    result = 1
    q = f.field.q
    for irr, e in factor(f).factors:
        norm = q**irr.degree
        result *= norm ** (e - 1) * (norm - 1)
    return result


@functools.lru_cache(maxsize=None)
def _order_of_x_mod_irreducible(irr: Poly) -> int:
    # multiplicative order of the residue of x in the field F_q[x]/(irr)
    if irr.coeff(0).is_zero:
        raise PreconditionError("x has no order modulo a multiple of x")
    d = irr.degree
    q = irr.field.q
    if q**d - 1 >= ORDER_LIMIT:
        raise SizeLimitError(f"group order {q}^{d}-1 exceeds the 64-bit guardrail")
    group = q**d - 1
    ctx = _ModContext(irr)
    x = Poly.x(irr.field)
    one = Poly.one(irr.field)
    e = group
    for prime, _ in integer_factor(group):
        while e % prime == 0 and ctx.pow(x, e // prime) == one:
            e //= prime
    return e


def _ord_from_factor_list(field: FiniteField, parts) -> int:
    squarefree_order = 1
    max_mult = 0
    for irr, e in parts:
        squarefree_order = math.lcm(
            squarefree_order, _order_of_x_mod_irreducible(irr)
        )
        max_mult = max(max_mult, e)
    pe = 1
    while pe < max_mult:
        pe *= field.p
    return squarefree_order * pe


def ord_x_mod(F: Poly) -> int:
    """Least k > 0 with x^k = 1 (mod F), for F coprime to x; 1 for constants.

    Computed as the lcm of the orders at the distinct irreducible divisors,
    times the least power of p that reaches the maximal multiplicity.
    """
    if F.is_zero:
        raise PreconditionError("order modulo the zero polynomial is undefined")
    if F.degree == 0:
        return 1
    if F.coeff(0).is_zero:
        raise PreconditionError("polynomial is divisible by x")
    return _ord_from_factor_list(F.field, factor(F).factors)


def count_divisors(g: Poly) -> int:
    """Number of distinct monic divisors."""
    if g.is_zero:
        raise PreconditionError("the zero polynomial has no divisor lattice")
    n = 1
    for _, e in factor(g).factors:
        n *= e + 1
    return n


def monic_divisors(g: Poly) -> list[Poly]:
    """All monic divisors, sorted by (degree, coefficients from the top down)."""
    if g.is_zero:
        raise PreconditionError("the zero polynomial has no divisor lattice")
    if count_divisors(g) > DIVISOR_LIMIT:
        raise SizeLimitError("divisor lattice exceeds 10^6 entries")
    divs = [Poly.one(g.field)]
    for irr, e in factor(g).factors:
        divs = [d * irr**j for d in divs for j in range(e + 1)]
    return sorted(divs, key=Poly.sort_key)


# ---------------------------------------------------------------------------
# enumeration helpers


def monic_polys(field: FiniteField, degree: int):
    """All monic polynomials of the exact degree, in coefficient order."""
    if degree < 0:
        return
    total = field.q**degree
    if total > DIVISOR_LIMIT:
        raise SizeLimitError("enumeration would exceed 10^6 polynomials")
    for m in range(total):
        coeffs = []
        n = m
        for _ in range(degree):
            coeffs.append(field.element_from_int(n % field.q))
            n //= field.q
        coeffs.append(field.one)
        yield Poly.from_coeffs(field, coeffs)


def irreducibles(field: FiniteField, degree: int):
    """All monic irreducible polynomials of the exact degree."""
    if degree < 1:
        return
    for f in monic_polys(field, degree):
        if is_irreducible(f):
            yield f


# ---------------------------------------------------------------------------
# text grammar


_TOKEN_PATTERN = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z])|(?P<caret>\^)|(?P<star>\*)"
    r"|(?P<plus>\+)|(?P<minus>-)|(?P<lpar>\()|(?P<rpar>\))|(?P<ws>\s+)|(?P<bad>.)"
)


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN_PATTERN.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", text, m.start())
        tokens.append((kind, m.group(), m.start()))
    return tokens


class _Parser:
    def __init__(self, field: FiniteField, text: str, var: str):
        self.field = field
        self.text = text
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return (None, "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.peek()[2] if pos is None else pos)

    def parse(self) -> Poly:
        coeffs = self._sum(allow_var=True)
        kind, val, _ = self.peek()
        if kind is not None:
            self.fail(f"unexpected {val!r}")
        coeffs = {e: c for e, c in coeffs.items() if not c.is_zero}
        if not coeffs:
            return Poly.zero(self.field)
        deg = max(coeffs)
        if deg + 1 > coefficient_limit():
            raise SizeLimitError(
                f"degree {deg} exceeds the coefficient guardrail"
            )
        items = [coeffs.get(e, self.field.zero) for e in range(deg + 1)]
        return Poly.from_coeffs(self.field, items)

    def _sum(self, allow_var: bool) -> dict[int, FieldElement]:
        coeffs: dict[int, FieldElement] = {}
        first = True
        while True:
            kind, val, _ = self.peek()
            if kind is None or kind == "rpar":
                if first:
                    self.fail("expected a term")
                return coeffs
            sign = 1
            saw_sign = False
            while kind in ("plus", "minus"):
                saw_sign = True
                if kind == "minus":
                    sign = -sign
                self.take()
                kind, val, _ = self.peek()
            if not first and not saw_sign:
                self.fail(f"expected '+' or '-' before {val!r}")
            c, e = self._term(allow_var)
            if sign < 0:
                c = -c
            coeffs[e] = coeffs.get(e, self.field.zero) + c
            first = False

    def _term(self, allow_var: bool):
        coeff = self.field.one
        exp = 0
        while True:
            c, e = self._atom(allow_var)
            coeff = coeff * c
            exp += e
            kind, _, _ = self.peek()
            if kind == "star":
                self.take()
                continue
            return coeff, exp

    def _atom(self, allow_var: bool):
        kind, val, pos = self.take()
        if kind == "int":
            nk, _, npos = self.peek()
            if nk == "caret":
                self.fail("exponents apply to variables only", npos)
            return self.field(int(val)), 0
        if kind == "name":
            if allow_var and val == self.var:
                return self.field.one, self._opt_exponent()
            if val == "t":
                if self.field.k == 1:
                    raise ParseError(
                        "generator t needs an extension field", self.text, pos
                    )
                return self.field.generator() ** self._opt_exponent(), 0
            self.fail(f"unknown symbol {val!r}", pos)
        if kind == "lpar":
            inner = self._sum(allow_var=False)
            kind2, _, pos2 = self.take()
            if kind2 != "rpar":
                raise ParseError("expected ')'", self.text, pos2)
            return inner.get(0, self.field.zero), 0
        self.fail(f"unexpected {val!r}" if kind else "unexpected end of input", pos)

    def _opt_exponent(self) -> int:
        kind, _, _ = self.peek()
        if kind != "caret":
            return 1
        self.take()
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected an integer exponent", self.text, pos)
        return int(val)


def parse_poly(field: FiniteField, text: str, var: str = "x") -> Poly:
    """Parse polynomial text like 'x^4+x+1', '2*x^3-x', or '(t+1)*x^2+t'.

    Coefficients are integers reduced mod p, or expressions in the field
    generator t when the field is an extension.
    """
    return _Parser(field, text, var).parse()
