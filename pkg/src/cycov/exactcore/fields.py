"""Coefficient fields: the rationals and finite fields GF(p^k).

Rationals are plain :class:`fractions.Fraction` values. Finite field
elements are :class:`FFElement` instances bound to a :class:`FiniteField`,
which is obtained through the cached factory :func:`GF` so that equal
parameters always give the identical field object.

Elements of GF(p^k) are residues of polynomials over GF(p) modulo a fixed
monic irreducible polynomial of degree k.  The modulus is the first
irreducible polynomial ``x^k + c_{k-1} x^{k-1} + ... + c_0`` when the tail
``(c_{k-1}, ..., c_0)`` is ordered lexicographically, i.e. the one with the
smallest integer code ``sum c_i p^i``.  Elements have the same integer code:
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.
"""

from __future__ import annotations

import functools
import random
from fractions import Fraction
from typing import Iterator

from ..errors import DomainError


class Rationals:
    """The field of rational numbers, with Fraction elements."""

    characteristic = 0
    order = None
    is_finite = False
    degree = 1

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, FFElement):
            raise DomainError("cannot coerce a finite field element into QQ")
        return Fraction(value)

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return "QQ"

    def random_element(self, rng: random.Random, bound: int = 10) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def format(self, x: Fraction) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    @property
    def spec(self) -> str:
        return "QQ"


QQ = Rationals()


def is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


# --- dense polynomials over GF(p) on int lists, low degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _xpow_mod(e: int, m: list[int], p: int) -> list[int]:
    result, base = [1], _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(poly: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p) (coefficients low first)."""
    k = len(poly) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if _xpow_mod(p**k, poly, p) != [0, 1]:
        return False
    for q in _prime_factors(k):
        h = _xpow_mod(p ** (k // q), poly, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(poly, _trim(h), p)) != 1:
            return False
    return True


def first_irreducible(p: int, k: int) -> tuple[int, ...]:
    for code in range(p**k):
        tail = [(code // p**i) % p for i in range(k)]
        poly = tail + [1]
        if is_irreducible_mod_p(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """GF(p^k).  Do not instantiate directly; use :func:`GF`."""

    is_finite = True

    def __init__(self, p: int, k: int):
        if k < 1:
            raise DomainError(f"extension degree must be >= 1, got {k}")
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.k = k
        self.characteristic = p
        self.degree = k
        self.order = p**k
        self.modulus = first_irreducible(p, k) if k > 1 else (0, 1)
        self.zero = FFElement(self, self._zero_raw())
        self.one = FFElement(self, self._from_int_raw(1))

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def __reduce__(self):
        return (GF, (self.p, self.k))

    @property
    def spec(self) -> str:
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    # raw representations: int for k == 1, tuple of k ints otherwise

    def _zero_raw(self):
        return 0 if self.k == 1 else (0,) * self.k

    def _from_int_raw(self, n: int):
        if self.k == 1:
            return n % self.p
        return (n % self.p,) + (0,) * (self.k - 1)

    def _from_code_raw(self, code: int):
        if not 0 <= code < self.order:
            raise DomainError(f"element code {code} out of range for {self!r}")
        if self.k == 1:
            return code
        return tuple((code // self.p**i) % self.p for i in range(self.k))

    def _add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        if self.k == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def _mul(self, a, b):
        p = self.p
        if self.k == 1:
            return a * b % p
        k = self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        m = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def _is_zero(self, a) -> bool:
        return a == 0 if self.k == 1 else not any(a)

    def _pow(self, a, e: int):
        if e < 0:
            a, e = self._inv(a), -e
        result = self._from_int_raw(1)
        while e:
            if e & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            e >>= 1
        return result

    def _inv(self, a):
        if self._is_zero(a):
            raise ZeroDivisionError(f"division by zero in {self!r}")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._pow(a, self.order - 2)

    # public API

    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field is self:
                return value
            raise DomainError(f"cannot coerce element of {value.field!r} into {self!r}")
        if isinstance(value, Fraction):
            num = self._from_int_raw(value.numerator)
            den = self._from_int_raw(value.denominator)
            if self._is_zero(den):
                raise DomainError(f"denominator of {value} vanishes in {self!r}")
            return FFElement(self, self._mul(num, self._inv(den)))
        if isinstance(value, int):
            return FFElement(self, self._from_int_raw(value))
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def from_int(self, code: int) -> "FFElement":
        """Element with the given integer code (base-p digits are coefficients)."""
        return FFElement(self, self._from_code_raw(code))

    def from_coeffs(self, coeffs) -> "FFElement":
        coeffs = [c % self.p for c in coeffs]
        if len(coeffs) > self.k:
            raise DomainError("too many coefficients")
        if self.k == 1:
            return FFElement(self, coeffs[0] if coeffs else 0)
        return FFElement(self, tuple(coeffs + [0] * (self.k - len(coeffs))))

    def gen(self) -> "FFElement":
        """The class of x modulo the defining polynomial."""
        if self.k == 1:
            return self.one
        return self.from_coeffs([0, 1])

    def elements(self) -> Iterator["FFElement"]:
        for code in range(self.order):
            yield self.from_int(code)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FFElement":
        lo = 1 if nonzero else 0
        return self.from_int(rng.randrange(lo, self.order))

    def format(self, x: "FFElement") -> str:
        if self.k == 1:
            return f"{x.to_int()} mod {self.p}"
        return f"{x.to_int()} mod {self.p}^{self.k}"


@functools.lru_cache(maxsize=None)
def _gf(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)


def GF(p: int, k: int = 1) -> FiniteField:
    """The unique field with p^k elements (cached: equal arguments give the same object)."""
    return _gf(int(p), int(k))


class FFElement:
    """Immutable element of a finite field."""

    __slots__ = ("field", "_v")

    def __init__(self, field: FiniteField, raw):
        self.field = field
        self._v = raw

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field is not self.field:
                raise DomainError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other._v
        if isinstance(other, (int, Fraction)):
            return self.field(other)._v
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._add(self._v, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._sub(self._v, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._sub(o, self._v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._mul(self._v, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._mul(self._v, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FFElement(self.field, self.field._mul(o, self.field._inv(self._v)))

    def __neg__(self):
        return FFElement(self.field, self.field._neg(self._v))

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        return FFElement(self.field, self.field._pow(self._v, e))

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return other.field is self.field and other._v == self._v
        if isinstance(other, (int, Fraction)):
            try:
                return self.field(other)._v == self._v
            except DomainError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.k, self._v))

    def __bool__(self):
        return not self.field._is_zero(self._v)

    def inverse(self) -> "FFElement":
        return FFElement(self.field, self.field._inv(self._v))

    def to_int(self) -> int:
        if self.field.k == 1:
            return self._v
        return sum(c * self.field.p**i for i, c in enumerate(self._v))

    def coeffs(self) -> tuple[int, ...]:
        return (self._v,) if self.field.k == 1 else self._v

    def frobenius(self, times: int = 1) -> "FFElement":
        return self ** (self.field.p**times)

    def in_subfield(self, j: int) -> bool:
        """True iff this element lies in the subfield with p^j elements."""
        return self ** (self.field.p**j) == self

    def __repr__(self) -> str:
        return self.field.format(self)

    __str__ = __repr__


def parse_field(text: str | None):
    """Parse ``p`` or ``p^k`` into a field; ``None``, ``QQ`` and ``Q`` give the rationals."""
    if text is None or text.strip().upper() in ("QQ", "Q", ""):
        return QQ
    text = text.strip()
    try:
        if "^" in text:
            p, k = text.split("^")
            return GF(int(p), int(k))
        return GF(int(text))
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"cannot parse field {text!r}; expected p or p^k") from None


def field_of(x):
    """The field a scalar lives in (ints and Fractions live in QQ)."""
    if isinstance(x, FFElement):
        return x.field
    return QQ
