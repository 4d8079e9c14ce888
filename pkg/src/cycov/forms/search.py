"""Exhaustive search for singular points of a hypersurface over finite fields.

The search visits every projective point over GF(q), q = p^(e*j), through
the standard charts (first nonzero coordinate equal to 1), but prunes with
the partial derivatives: whenever some partial, after the coordinates fixed
so far are substituted, involves a single free variable, only the roots of
the gcd of all such partials are tried for that variable.  Branches where a
partial becomes a nonzero constant are dropped.  Variables that cannot be
pinned down this way are enumerated over all of GF(q), which is what the
work budget counts.

The result is exhaustive for the fields searched.  It is not a proof of
smoothness over the algebraic closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError, SearchBudgetExceeded
from ..exactcore import GF, upoly
from ..exactcore.fields import FiniteField
from .poly import Form, Poly, partials

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class ProjectivePoint:
    """A point with first nonzero coordinate 1; ``degree`` is j for GF(p^(e*j))."""

    coords: tuple
    degree: int

    def codes(self) -> tuple[int, ...]:
        return tuple(c.to_int() for c in self.coords)

    def __repr__(self):
        return "(" + ":".join(str(c) for c in self.codes()) + f") over {self.coords[0].field!r}"


def embedding(small: FiniteField, big: FiniteField):
    """A field homomorphism small -> big (deterministic choice of root)."""
    if small is big:
        return lambda x: x
    if small.p != big.p or big.k % small.k:
        raise DomainError(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return lambda x: big(x.to_int())
    mod = [big(c) for c in small.modulus]
    rho = upoly.roots(mod, big)[0]
    powers = [rho**i for i in range(small.k)]

    def embed(x):
        acc = big.zero
        for c, r in zip(x.coeffs(), powers):
            if c:
                acc = acc + r * c
        return acc

    return embed


class _Search:
    def __init__(self, polys: list[Poly], field: FiniteField, budget: int):
        self.polys = polys
        self.field = field
        self.budget = budget
        self.work = 0
        self.found: list[tuple] = []
        self.nvars = polys[0].nvars

    def charge(self, amount: int) -> None:
        self.work += amount
        if self.work > self.budget:
            raise SearchBudgetExceeded(
                f"enumeration budget of {self.budget} exceeded while searching over {self.field!r}"
            )

    def run(self) -> list[tuple]:
        n = self.nvars
        for lead in range(n):
            fixed = {i: self.field.zero for i in range(lead)}
            fixed[lead] = self.field.one
            polys = [p.substitute(fixed) for p in self.polys]
            free = [i for i in range(lead + 1, n)]
            self._solve(polys, free, fixed)
        return self.found

    def _solve(self, polys: list[Poly], free: list[int], assignment: dict) -> None:
        live = []
        for p in polys:
            if p.is_zero():
                continue
            if p.total_degree == 0:
                return  # nonzero constant
            live.append(p)
        if not free:
            self.found.append(tuple(assignment[i] for i in range(self.nvars)))
            return
        if not live:
            count = self.field.order ** len(free)
            self.charge(count)
            self._enumerate_all(free, assignment)
            return
        for v in free:
            uni = [p for p in live if p.variables_used() == {v}]
            if uni:
                g = None
                for p in uni:
                    u = self._univariate(p, v)
                    g = u if g is None else upoly.gcd(g, u)
                    if len(g) == 1:
                        return
                values = upoly.roots(g, self.field)
                break
        else:
            v = free[0]
            self.charge(self.field.order)
            values = list(self.field.elements())
        rest = [i for i in free if i != v]
        for val in values:
            nxt = dict(assignment)
            nxt[v] = val
            self._solve([p.substitute({v: val}) for p in live], rest, nxt)

    def _univariate(self, p: Poly, v: int) -> list:
        deg = max(e[v] for e in p.terms)
        coeffs = [self.field.zero] * (deg + 1)
        for e, c in p.terms.items():
            coeffs[e[v]] = c
        return upoly.trim(coeffs)

    def _enumerate_all(self, free: list[int], assignment: dict) -> None:
        if not free:
            self.found.append(tuple(assignment[i] for i in range(self.nvars)))
            return
        for val in self.field.elements():
            nxt = dict(assignment)
            nxt[free[0]] = val
            self._enumerate_all(free[1:], nxt)


def common_zeros(polys: list[Poly], field: FiniteField, budget: int = DEFAULT_BUDGET) -> list[tuple]:
    """All projective points over ``field`` where every (homogeneous) poly vanishes."""
    if not polys:
        raise DomainError("no polynomials given")
    return _Search(polys, field, budget).run()


def singular_point_search(F: Form, extension_bound: int = 1, budget: int = DEFAULT_BUDGET
                          ) -> list[ProjectivePoint]:
    """Singular points of ``F = 0`` over GF(p^(e*j)) for j = 1..extension_bound.

    ``F`` must have coefficients in a finite field GF(p^e).  Each point is
    reported once, tagged with the smallest j whose field contains all its
    (normalized) coordinates.  A point is reported when every partial
    vanishes there; by Euler's formula it then lies on ``F = 0`` unless the
    characteristic divides ``deg F``.
    """
    base = F.field
    if not getattr(base, "is_finite", False):
        raise DomainError("singular point search needs a finite field; reduce the form mod p first")
    if extension_bound < 1:
        raise DomainError("extension bound must be >= 1")
    parts = partials(F)
    out: list[ProjectivePoint] = []
    for j in range(1, extension_bound + 1):
        K = GF(base.p, base.k * j)
        emb = embedding(base, K)
        polys = [p.map_coeffs(emb, K) for p in parts]
        proper = [jj for jj in range(1, j) if j % jj == 0]
        for pt in common_zeros(polys, K, budget):
            if any(all(c.in_subfield(base.k * jj) for c in pt) for jj in proper):
                continue
            out.append(ProjectivePoint(pt, j))
    out.sort(key=lambda P: (P.degree, P.codes()))
    return out
