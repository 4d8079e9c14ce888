"""Truncated intersection rings of products of projective spaces.

The ring of P^{n_1} x ... x P^{n_k} is Z[h_1, ..., h_k] / (h_i^{n_i + 1}).
Only what the degree computations need is implemented: products, sums and
coefficient extraction.  For a factor P^N with large N whose hyperplane
class is only ever read to first order, a truncation of 2 is used instead
of N + 1; no coefficient that is read off changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import DomainError


@dataclass(frozen=True)
class ChowRing:
    names: tuple[str, ...]
    truncations: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.truncations):
            raise DomainError("one truncation bound per variable")
        if any(t < 1 for t in self.truncations):
            raise DomainError("truncation bounds must be >= 1")

    def _ok(self, exps) -> bool:
        return all(e < t for e, t in zip(exps, self.truncations))

    def element(self, coeffs: dict) -> "ChowClass":
        clean = {}
        for e, c in coeffs.items():
            e = tuple(e)
            if len(e) != len(self.names):
                raise DomainError(f"exponent {e} has the wrong length")
            if c and self._ok(e):
                clean[e] = clean.get(e, 0) + int(c)
        return ChowClass(self, {e: c for e, c in clean.items() if c})

    def gen(self, name: str) -> "ChowClass":
        i = self.names.index(name)
        return self.element({tuple(int(j == i) for j in range(len(self.names))): 1})

    def const(self, c: int) -> "ChowClass":
        return self.element({(0,) * len(self.names): c})


@dataclass(frozen=True)
class ChowClass:
    ring: ChowRing
    coeffs: dict = field(hash=False)

    def _check(self, other):
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, ChowClass) or other.ring != self.ring:
            raise DomainError("ring mismatch")
        return other

    def __add__(self, other):
        o = self._check(other)
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self.ring.element(out)

    __radd__ = __add__

    def __neg__(self):
        return self.ring.element({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ring.element({e: c * other for e, c in self.coeffs.items()})
        return chow_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        result = self.ring.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, ChowClass) and self.ring == other.ring and self.coeffs == other.coeffs

    def coefficient(self, **exps: int) -> int:
        key = tuple(exps.get(n, 0) for n in self.ring.names)
        return self.coeffs.get(key, 0)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def chow_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    if a.ring != b.ring:
        raise DomainError("ring mismatch")
    out: dict = {}
    for (e1, c1), (e2, c2) in product(a.coeffs.items(), b.coeffs.items()):
        e = tuple(x + y for x, y in zip(e1, e2))
        if a.ring._ok(e):
            out[e] = out.get(e, 0) + c1 * c2
    return a.ring.element(out)


def discriminant_degree(n: int, m: int) -> int:
    """Degree of the locus of singular degree-m forms in n+1 variables.

    The incidence variety {(x, F) : all dF/dx_i(x) = 0} in P^n x P(forms)
    is cut out by n+1 equations of bidegree (m-1, 1), so its class is
    ((m-1) xi + eta)^(n+1).  Pushing forward to P(forms) keeps the
    coefficient of xi^n eta.
    """
    if n < 1 or m < 1:
        raise DomainError("need n >= 1 and m >= 1")
    ring = ChowRing(("xi", "eta"), (n + 1, 2))
    cls = ((m - 1) * ring.gen("xi") + ring.gen("eta")) ** (n + 1)
    return cls.coefficient(xi=n, eta=1)


def z_bidegree(d1: int, d2: int) -> tuple[int, int]:
    """Bidegree of the locus of pairs of binary forms with a common zero.

    The forms have degrees 2*d1 - d2 and 2*d2 - d1.  The incidence variety
    in P^1 x P(forms_1) x P(forms_2) has class
    ((2 d1 - d2) eta + xi1)((2 d2 - d1) eta + xi2); pushing forward along
    P^1 reads off the coefficients of eta*xi1 and eta*xi2.
    """
    m1, m2 = 2 * d1 - d2, 2 * d2 - d1
    if d1 < 0 or d2 < 0 or m1 < 0 or m2 < 0:
        raise DomainError("invalid branch degrees")
    ring = ChowRing(("eta", "xi1", "xi2"), (2, 2, 2))
    eta, xi1, xi2 = ring.gen("eta"), ring.gen("xi1"), ring.gen("xi2")
    cls = (m1 * eta + xi1) * (m2 * eta + xi2)
    return cls.coefficient(eta=1, xi1=1), cls.coefficient(eta=1, xi2=1)
