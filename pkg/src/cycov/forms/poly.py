"""Sparse multivariate polynomials and homogeneous forms.

:class:`Poly` is a general sparse polynomial in ``x0, ..., x_{nvars-1}``;
:class:`Form` is a Poly known to be homogeneous of a fixed degree.  Both are
immutable.  Exponent vectors are tuples of ints, coefficients live in a
single field (``QQ`` or a ``GF``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from ..errors import DomainError
from ..exactcore import QQ, FFElement, GF, field_of
from ..exactcore import linalg


def _scalar_field(x):
    return field_of(x) if isinstance(x, FFElement) else None


class Poly:
    __slots__ = ("nvars", "field", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None, field=None):
        if nvars < 1:
            raise DomainError("a polynomial needs at least one variable")
        terms = dict(terms or {})
        if field is None:
            fields = {_scalar_field(c) for c in terms.values()} - {None}
            if len(fields) > 1:
                raise DomainError("coefficients from different fields")
            field = fields.pop() if fields else QQ
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps} for {nvars} variables")
            c = field(c)
            if c:
                clean[exps] = clean[exps] + c if exps in clean else c
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self.field = field
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, field, **extra):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.field = field
        obj._terms = terms
        obj._hash = None
        for k, v in extra.items():
            setattr(obj, k, v)
        return obj

    @classmethod
    def constant(cls, nvars: int, c, field=QQ) -> "Poly":
        return Poly(nvars, {(0,) * nvars: c}, field)

    @classmethod
    def var(cls, nvars: int, i: int, field=QQ) -> "Form":
        e = [0] * nvars
        e[i] = 1
        return Form(nvars, 1, {tuple(e): 1}, field)

    @property
    def terms(self) -> Mapping[tuple, object]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        degs = {sum(e) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def variables_used(self) -> set[int]:
        return {i for e in self._terms for i, x in enumerate(e) if x}

    # arithmetic

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DomainError("polynomials in different numbers of variables")
            if other.field is not self.field:
                raise DomainError(f"field mismatch: {self.field!r} vs {other.field!r}")
            return other
        if isinstance(other, (int, Fraction, FFElement)):
            return Poly.constant(self.nvars, other, self.field)
        return None

    def _combine(self, other, sign):
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e)
            if sign > 0:
                v = c if v is None else v + c
            else:
                v = -c if v is None else v - c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        if isinstance(self, Form) and isinstance(other, Form) and self.degree == other.degree:
            return Form._raw(self.nvars, terms, self.field, degree=self.degree)
        return Poly._raw(self.nvars, terms, self.field)

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self._combine(o, 1)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self._combine(o, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        terms = {e: -c for e, c in self._terms.items()}
        if isinstance(self, Form):
            return Form._raw(self.nvars, terms, self.field, degree=self.degree)
        return Poly._raw(self.nvars, terms, self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FFElement)):
            c = self.field(other)
            terms = {e: v * c for e, v in self._terms.items()} if c else {}
            if isinstance(self, Form):
                return Form._raw(self.nvars, terms, self.field, degree=self.degree)
            return Poly._raw(self.nvars, terms, self.field)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                terms[e] = v
        terms = {e: c for e, c in terms.items() if c}
        if isinstance(self, Form) and isinstance(o, Form):
            return Form._raw(self.nvars, terms, self.field, degree=self.degree + o.degree)
        return Poly._raw(self.nvars, terms, self.field)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = Form(self.nvars, 0, {(0,) * self.nvars: 1}, self.field) \
            if isinstance(self, Form) else Poly.constant(self.nvars, 1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.nvars == other.nvars
                and self.field is other.field
                and self._terms == other._terms
            )
        if isinstance(other, (int, Fraction, FFElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, repr(self.field), frozenset(self._terms.items())))
        return self._hash

    # calculus and evaluation

    def partial(self, i: int):
        terms = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                v = c * e[i]
                if v:
                    terms[tuple(ne)] = v
        if isinstance(self, Form):
            return Form._raw(self.nvars, terms, self.field, degree=max(self.degree - 1, 0))
        return Poly._raw(self.nvars, terms, self.field)

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise DomainError("point has the wrong number of coordinates")
        point = [self.field(x) for x in point]
        acc = self.field.zero
        for e, c in self._terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            acc = acc + t
        return acc

    def substitute(self, values: Mapping[int, object]) -> "Poly":
        """Set the variables in ``values`` to constants; result keeps nvars."""
        vals = {i: self.field(v) for i, v in values.items()}
        terms: dict = {}
        for e, c in self._terms.items():
            ne = list(e)
            for i, v in vals.items():
                if ne[i]:
                    c = c * v ** ne[i]
                    ne[i] = 0
            if c:
                ne = tuple(ne)
                s = terms.get(ne)
                terms[ne] = c if s is None else s + c
        terms = {e: c for e, c in terms.items() if c}
        return Poly._raw(self.nvars, terms, self.field)

    def linear_substitute(self, M: Sequence[Sequence]) -> "Poly":
        """Replace ``x_i`` by ``sum_j M[i][j] x_j``."""
        n = self.nvars
        lin = [
            Form(n, 1, {tuple(int(k == j) for k in range(n)): M[i][j] for j in range(n)}, self.field)
            for i in range(n)
        ]
        cache: dict[tuple[int, int], Poly] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = lin[i] ** k
            return cache[(i, k)]

        acc: Poly = Poly(n, {}, self.field)
        for e, c in self._terms.items():
            t: Poly = Poly.constant(n, c, self.field)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            acc = acc + t
        if isinstance(self, Form):
            return Form._raw(n, dict(acc._terms), self.field, degree=self.degree)
        return acc

    def reduce_mod(self, field) -> "Poly":
        """Map coefficients into another field (e.g. QQ into GF(p))."""
        terms = {e: field(c) for e, c in self._terms.items()}
        if isinstance(self, Form):
            return Form(self.nvars, self.degree, terms, field)
        return Poly(self.nvars, terms, field)

    def map_coeffs(self, fn, field) -> "Poly":
        terms = {e: fn(c) for e, c in self._terms.items()}
        if isinstance(self, Form):
            return Form(self.nvars, self.degree, terms, field)
        return Poly(self.nvars, terms, field)

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self._terms.items(), reverse=True)

    def to_text(self) -> str:
        return "".join(
            f"{self.field.format(c)} {','.join(map(str, e))}\n" for e, c in self.sorted_terms()
        )

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            cs = self.field.format(c)
            if self.field is QQ:
                parts.append(f"{cs}*{mono}" if mono else cs)
            else:
                parts.append(f"({cs})*{mono}" if mono else f"({cs})")
        return " + ".join(parts)


class Form(Poly):
    """Homogeneous polynomial of a fixed degree."""

    __slots__ = ("degree",)

    def __init__(self, nvars: int, degree: int, terms: Mapping[tuple, object] | None = None,
                 field=None):
        super().__init__(nvars, terms, field)
        if degree < 0:
            raise DomainError("negative degree")
        bad = [e for e in self._terms if sum(e) != degree]
        if bad:
            raise DomainError(f"term {bad[0]} is not of degree {degree}; form is not homogeneous")
        self.degree = degree

    @classmethod
    def from_poly(cls, p: Poly, degree: int | None = None) -> "Form":
        if degree is None:
            degree = p.homogeneous_degree()
            if degree is None:
                raise DomainError("polynomial is not homogeneous (or is zero with unknown degree)")
        return cls(p.nvars, degree, p.terms, p.field)

    @property
    def num_vars(self) -> int:
        return self.nvars

    def __eq__(self, other):
        eq = super().__eq__(other)
        if eq is True and isinstance(other, Form):
            return self.degree == other.degree
        return eq

    __hash__ = Poly.__hash__


def monomial_form(nvars: int, exps: Sequence[int], c=1, field=QQ) -> Form:
    return Form(nvars, sum(exps), {tuple(exps): c}, field)


@dataclass(frozen=True)
class TwistSpec:
    """Exponents of det(A) and of the scalar alpha multiplying f(A^-1 x)."""

    det_exponent: int = 0
    scalar_exponent: int = 0


def act_linear(f: Form, A: Sequence[Sequence], alpha=None, twist: TwistSpec = TwistSpec()) -> Form:
    """``alpha^s * det(A)^e * f(A^-1 x)`` with ``(e, s)`` taken from ``twist``."""
    field = f.field
    if len(A) != f.nvars or any(len(r) != f.nvars for r in A):
        raise DomainError(f"matrix must be {f.nvars}x{f.nvars}")
    d = linalg.det(A, field)
    if not d:
        raise DomainError("non-invertible matrix")
    Ainv = linalg.inverse(A, field)
    g = f.linear_substitute(Ainv)
    scale = field.one
    if twist.det_exponent:
        scale = scale * d**twist.det_exponent
    if twist.scalar_exponent:
        if alpha is None:
            raise DomainError("scalar exponent given but alpha is absent")
        alpha = field(alpha)
        if not alpha:
            raise DomainError("alpha must be nonzero")
        scale = scale * alpha**twist.scalar_exponent
    return g * scale if scale != field.one else g


def partials(F: Form) -> list[Form]:
    return [F.partial(i) for i in range(F.nvars)]


# --- text format ------------------------------------------------------------

_MOD = re.compile(r"^(-?\d+)\s+mod\s+(\d+)(?:\^(\d+))?$")
_RAT = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_coefficient(token: str, field=None):
    token = token.strip()
    m = _MOD.match(token)
    if m:
        a, p, k = int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
        F = GF(p, k)
        if field is not None and field is not F:
            raise DomainError(f"coefficient {token!r} is not in {field!r}")
        return F.from_int(a) if k > 1 else F(a)
    m = _RAT.match(token)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise DomainError(f"zero denominator in {token!r}")
        value = Fraction(num, den)
        return field(value) if field is not None else value
    raise DomainError(f"cannot parse coefficient {token!r}")


def parse_form(text: str, field=None, nvars: int | None = None, degree: int | None = None) -> Form:
    """Parse the one-term-per-line format ``<coefficient> <e0,e1,...,en>``.

    Blank lines and ``#`` comments are ignored.  The field defaults to the
    one named by ``mod`` coefficients, or QQ.  ``nvars``/``degree`` are only
    needed for the zero form.
    """
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            coeff, exps = line.rsplit(None, 1)
            e = tuple(int(x) for x in exps.split(","))
        except ValueError:
            raise DomainError(f"line {lineno}: expected '<coefficient> <e0,...,en>'") from None
        entries.append((parse_coefficient(coeff, field), e))
    if field is None:
        fields = {field_of(c) for c, _ in entries if isinstance(c, FFElement)}
        if len(fields) > 1:
            raise DomainError("coefficients from different fields")
        field = fields.pop() if fields else QQ
    if entries:
        lens = {len(e) for _, e in entries}
        if len(lens) != 1 or (nvars is not None and lens != {nvars}):
            raise DomainError("exponent vectors of inconsistent length")
        nvars = lens.pop()
        degs = {sum(e) for _, e in entries}
        if len(degs) != 1 or (degree is not None and degs != {degree}):
            raise DomainError("terms of different degrees; form is not homogeneous")
        degree = degs.pop()
    elif nvars is None or degree is None:
        raise DomainError("empty form text: number of variables and degree must be given")
    terms: dict = {}
    for c, e in entries:
        terms[e] = terms[e] + field(c) if e in terms else field(c)
    return Form(nvars, degree, terms, field)


def format_form(F: Poly) -> str:
    return F.to_text()


def parse_poly(text: str, field=None, nvars: int | None = None) -> Poly:
    """Like :func:`parse_form` but without the homogeneity requirement."""
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            coeff, exps = line.rsplit(None, 1)
            entries.append((parse_coefficient(coeff, field), tuple(int(x) for x in exps.split(","))))
    if entries:
        nvars = len(entries[0][1])
    if nvars is None:
        raise DomainError("empty polynomial text: number of variables must be given")
    if field is None:
        fields = {field_of(c) for c, _ in entries if isinstance(c, FFElement)}
        field = fields.pop() if len(fields) == 1 else QQ
    terms: dict = {}
    for c, e in entries:
        terms[e] = terms[e] + field(c) if e in terms else field(c)
    return Poly(nvars, terms, field)


def random_form(nvars: int, degree: int, field, rng, density: float = 1.0) -> Form:
    from itertools import combinations_with_replacement

    terms = {}
    for combo in combinations_with_replacement(range(nvars), degree):
        if density < 1.0 and rng.random() > density:
            continue
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = field.random_element(rng)
    return Form(nvars, degree, terms, field)


def as_scalar_list(values: Iterable, field) -> list:
    return [field(v) for v in values]
