"""Cover algebras, smoothness verdicts and the singular-witness construction.

A uniform cyclic cover of P^n of degree r and branch degree d is the
algebra O + L + ... + L^(r-1) with t^i t^j = t^(i+j) for i + j < r and
t^i t^j = F t^(i+j-r) otherwise, F the branch form of degree r*d.  A
cyclic triple cover of P^1 is O + L1 + L2 with t1^2 = f1 t2,
t2^2 = f2 t1 and t1 t2 = h; it is associative exactly when h = f1 f2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .errors import DomainError
from .exactcore import QQ, linalg
from .forms import (
    Form,
    Poly,
    ProjectivePoint,
    check_characteristic,
    disc_binary,
    is_squarefree_binary,
    singular_point_search,
    sylvester_resultant,
)
from .forms.search import DEFAULT_BUDGET


@dataclass(frozen=True)
class UniformCoverSpec:
    n: int
    r: int
    d: int
    F: Form

    def __post_init__(self):
        if self.n < 1 or self.r < 1 or self.d < 0:
            raise DomainError("need n >= 1, r >= 1, d >= 0")
        if not isinstance(self.F, Form) or self.F.nvars != self.n + 1:
            raise DomainError(f"branch form must be a form in {self.n + 1} variables")
        if self.F.degree != self.r * self.d:
            raise DomainError(f"branch form has degree {self.F.degree}, expected r*d = {self.r * self.d}")
        if self.F.is_zero():
            raise DomainError("branch form must be nonzero")


@dataclass(frozen=True)
class TripleCoverSpec:
    d1: int
    d2: int
    f1: Form
    f2: Form

    def __post_init__(self):
        m1, m2 = 2 * self.d1 - self.d2, 2 * self.d2 - self.d1
        if self.d1 < 0 or self.d2 < 0 or m1 < 0 or m2 < 0:
            raise DomainError("invalid branch degrees")
        for f, m, name in ((self.f1, m1, "f1"), (self.f2, m2, "f2")):
            if not isinstance(f, Form) or f.nvars != 2:
                raise DomainError(f"{name} must be a binary form")
            if f.degree != m:
                raise DomainError(f"{name} has degree {f.degree}, expected {m}")
            if f.is_zero():
                raise DomainError(f"{name} must be nonzero")
        if self.f1.field is not self.f2.field:
            raise DomainError("f1 and f2 over different fields")

    @classmethod
    def from_forms(cls, f1: Form, f2: Form) -> "TripleCoverSpec":
        """Recover (d1, d2) from deg f1 = 2 d1 - d2 and deg f2 = 2 d2 - d1."""
        m1, m2 = f1.degree, f2.degree
        if (2 * m1 + m2) % 3 or (m1 + 2 * m2) % 3:
            raise DomainError(
                f"branch form degrees ({m1}, {m2}) do not come from integral (d1, d2)"
            )
        return cls((2 * m1 + m2) // 3, (m1 + 2 * m2) // 3, f1, f2)


# --- algebras ---------------------------------------------------------------

@dataclass(frozen=True)
class AssociativityAudit:
    passed: bool
    associators: dict  # (i, j, k) -> nonzero coefficient vector

    def to_json(self, labels) -> dict:
        return {
            "passed": self.passed,
            "nonzero_associators": {
                f"({labels[i]}*{labels[j]})*{labels[k]}": [p.to_text() for p in vec]
                for (i, j, k), vec in sorted(self.associators.items())
            },
        }


@dataclass(frozen=True)
class CoverAlgebra:
    """Commutative algebra free on ``labels`` with grades modulo ``cyclic_order``.

    ``table[(i, j)]`` is the coefficient vector of ``e_i * e_j``.
    """

    kind: str
    labels: tuple[str, ...]
    grades: tuple[int, ...]
    cyclic_order: int
    table: dict = field(hash=False)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def _ring(self) -> tuple[int, object]:
        p = next(iter(self.table.values()))[0]
        return p.nvars, p.field

    def _zero_vec(self):
        nv, fld = self._ring()
        return [Poly(nv, {}, fld) for _ in self.labels]

    def multiply(self, u, v) -> list:
        """Product of two coefficient vectors."""
        out = self._zero_vec()
        for i, j in product(range(self.rank), repeat=2):
            if u[i].is_zero() or v[j].is_zero():
                continue
            c = u[i] * v[j]
            for k, s in enumerate(self.table[(i, j)]):
                if not s.is_zero():
                    out[k] = out[k] + c * s
        return out

    def basis_vector(self, i: int) -> list:
        nv, fld = self._ring()
        vec = self._zero_vec()
        vec[i] = Poly.constant(nv, 1, fld)
        return vec

    def associator(self, i: int, j: int, k: int) -> list:
        ei, ej, ek = (self.basis_vector(x) for x in (i, j, k))
        left = self.multiply(self.multiply(ei, ej), ek)
        right = self.multiply(ei, self.multiply(ej, ek))
        return [a - b for a, b in zip(left, right)]

    def audit(self) -> AssociativityAudit:
        bad = {}
        for i, j, k in product(range(self.rank), repeat=3):
            vec = self.associator(i, j, k)
            if any(not p.is_zero() for p in vec):
                bad[(i, j, k)] = tuple(vec)
        return AssociativityAudit(not bad, bad)

    def is_commutative(self) -> bool:
        return all(
            tuple(self.table[(i, j)]) == tuple(self.table[(j, i)])
            for i, j in product(range(self.rank), repeat=2)
        )

    def is_unital(self) -> bool:
        return all(
            tuple(self.table[(0, i)]) == tuple(self.basis_vector(i)) for i in range(self.rank)
        )

    def grading_ok(self) -> bool:
        r = self.cyclic_order
        for (i, j), vec in self.table.items():
            for k, s in enumerate(vec):
                if not s.is_zero() and (self.grades[i] + self.grades[j] - self.grades[k]) % r:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "basis": list(self.labels),
            "grades": list(self.grades),
            "table": {
                f"{self.labels[i]}*{self.labels[j]}": [p.to_text() for p in self.table[(i, j)]]
                for i, j in sorted(self.table)
            },
        }


def build_uniform_algebra(spec: UniformCoverSpec) -> CoverAlgebra:
    r, F = spec.r, spec.F
    nv, fld = F.nvars, F.field
    zero = Poly(nv, {}, fld)
    one = Poly.constant(nv, 1, fld)
    labels = tuple("1" if i == 0 else ("t" if i == 1 else f"t^{i}") for i in range(r))
    table = {}
    for i, j in product(range(r), repeat=2):
        vec = [zero] * r
        s = i + j
        if s < r:
            vec[s] = one
        else:
            vec[s - r] = F
        table[(i, j)] = tuple(vec)
    return CoverAlgebra("uniform", labels, tuple(range(r)), r, table)


def build_triple_algebra(f1: Form, f2: Form, h: Poly | None = None
                         ) -> tuple[CoverAlgebra, AssociativityAudit]:
    """Rank-3 algebra with t1^2 = f1 t2, t2^2 = f2 t1, t1 t2 = h.

    ``h`` defaults to ``f1 * f2``; any other value is used verbatim.
    """
    if f1.nvars != f2.nvars or f1.field is not f2.field:
        raise DomainError("f1 and f2 must live in the same polynomial ring")
    if h is None:
        h = f1 * f2
    elif h.nvars != f1.nvars or h.field is not f1.field:
        raise DomainError("h must live in the same polynomial ring as f1, f2")
    nv, fld = f1.nvars, f1.field
    zero = Poly(nv, {}, fld)
    one = Poly.constant(nv, 1, fld)
    table = {
        (0, 0): (one, zero, zero),
        (0, 1): (zero, one, zero),
        (0, 2): (zero, zero, one),
        (1, 0): (zero, one, zero),
        (2, 0): (zero, zero, one),
        (1, 1): (zero, zero, f1),
        (2, 2): (zero, f2, zero),
        (1, 2): (h, zero, zero),
        (2, 1): (h, zero, zero),
    }
    alg = CoverAlgebra("triple", ("1", "t1", "t2"), (0, 1, 2), 3, table)
    return alg, alg.audit()


# --- smoothness ------------------------------------------------------------

@dataclass(frozen=True)
class SmoothnessVerdict:
    """``strength`` is "exact" when the verdict is proven, "bounded" when it
    only covers the finite fields searched (up to ``extension_bound``)."""

    smooth: bool
    strength: str
    reason: str
    witness: ProjectivePoint | None = None
    extension_bound: int | None = None

    def to_json(self) -> dict:
        out = {"smooth": self.smooth, "strength": self.strength, "reason": self.reason}
        if self.extension_bound is not None:
            out["extension_bound"] = self.extension_bound
        if self.witness is not None:
            out["witness"] = {
                "coords": list(self.witness.codes()),
                "field": repr(self.witness.coords[0].field),
            }
        return out


def is_smooth_uniform(spec: UniformCoverSpec, extension_bound: int = 1,
                      budget: int = DEFAULT_BUDGET) -> SmoothnessVerdict:
    """The cover is smooth iff its branch hypersurface F = 0 is smooth."""
    F = spec.F
    check_characteristic(F.field, 2 * spec.r * max(spec.d, 1))
    if F.degree == 0:
        return SmoothnessVerdict(True, "exact", "empty branch divisor")
    if F.degree == 1:
        return SmoothnessVerdict(True, "exact", "branch divisor is a hyperplane")
    if spec.n == 1:
        if disc_binary(F):
            return SmoothnessVerdict(True, "exact", "branch form has distinct roots")
        return SmoothnessVerdict(False, "exact", "branch form has a repeated root")
    pts = singular_point_search(F, extension_bound, budget)
    if pts:
        return SmoothnessVerdict(False, "exact", "singular point of the branch divisor", pts[0],
                                 extension_bound)
    return SmoothnessVerdict(
        True, "bounded",
        f"no singular point over extensions of degree <= {extension_bound}",
        None, extension_bound,
    )


def is_smooth_triple(spec: TripleCoverSpec) -> SmoothnessVerdict:
    """Smooth iff f1, f2 have no multiple zero and no common zero."""
    f1, f2 = spec.f1, spec.f2
    check_characteristic(f1.field, 2, *[f.degree for f in (f1, f2) if f.degree >= 2])
    for f, name in ((f1, "f1"), (f2, "f2")):
        if f.degree >= 2 and not is_squarefree_binary(f):
            return SmoothnessVerdict(False, "exact", f"{name} has a multiple zero")
    if f1.degree and f2.degree and not sylvester_resultant(f1, f2):
        return SmoothnessVerdict(False, "exact", "f1 and f2 have a common zero")
    return SmoothnessVerdict(True, "exact", "branch divisors reduced and disjoint")


# --- singular witness ---------------------------------------------------------

def generate_singular_witness(n: int, m: int, field, a) -> tuple[Form, tuple]:
    """``F`` with dehomogenization ``sum a_i g(x_i)``, ``g(x) = x^2 (x^(m-2) - 1)``.

    ``g`` has a double root at 0 and simple roots elsewhere, so for generic
    ``a`` the only singular point of ``F`` is ``(1:0:...:0)``, which is
    returned alongside ``F``.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    if m < 3:
        raise DomainError("witness construction needs m >= 3")
    check_characteristic(field, m, m - 2, 2)
    a = [field(x) for x in a]
    if len(a) != n:
        raise DomainError(f"need {n} coefficients a_i, got {len(a)}")
    if any(not x for x in a):
        raise DomainError("coefficients a_i must be nonzero")
    nv = n + 1
    terms = {}
    for i, ai in enumerate(a, start=1):
        top = [0] * nv
        top[i] = m
        low = [0] * nv
        low[i] = 2
        low[0] = m - 2
        terms[tuple(top)] = ai
        terms[tuple(low)] = -ai
    F = Form(nv, m, terms, field)
    point = tuple(field.one if i == 0 else field.zero for i in range(nv))
    return F, point


def linear_part_rank(F: Form, point) -> int:
    """Rank of the linear parts of the dehomogenized partials at an affine point.

    The point must have nonzero first coordinate; the matrix is the Hessian
    of ``F(1, x_1, ..., x_n)``.
    """
    fld = F.field
    point = [fld(c) for c in point]
    if not point[0]:
        raise DomainError("point must lie in the chart x0 != 0")
    inv = 1 / point[0]
    point = [c * inv for c in point]
    f = F.substitute({0: fld.one})
    n = F.nvars - 1
    first = [f.partial(i) for i in range(1, n + 1)]
    H = [[first[i].partial(j).evaluate(point) for j in range(1, n + 1)] for i in range(n)]
    return linalg.rank(H, fld)


@dataclass
class WitnessReport:
    F: Form
    point: tuple
    a: list
    partials_vanish: bool
    linear_rank: int
    singular_points: list
    tries: int = 1

    @property
    def passed(self) -> bool:
        n = self.F.nvars - 1
        return self.partials_vanish and self.linear_rank == n and self.only_expected

    @property
    def only_expected(self) -> bool:
        expected = tuple(1 if i == 0 else 0 for i in range(self.F.nvars))
        return [p.codes() for p in self.singular_points] == [expected]

    def to_json(self) -> dict:
        return {
            "form": self.F.to_text(),
            "a": [self.F.field.format(x) for x in self.a],
            "point": [self.F.field.format(x) for x in self.point],
            "partials_vanish": self.partials_vanish,
            "linear_rank": self.linear_rank,
            "singular_points": [
                {"coords": list(p.codes()), "field": repr(p.coords[0].field)}
                for p in self.singular_points
            ],
            "only_expected": self.only_expected,
            "passed": self.passed,
            "tries": self.tries,
        }


def verify_witness(F: Form, point, a, extension_bound: int = 2, search_field=None,
                   budget: int = DEFAULT_BUDGET) -> WitnessReport:
    """Check the witness: partials vanish at the point, linear parts have rank n,
    and no other singular point exists over the searched fields.

    Forms over QQ are reduced into ``search_field`` for the search.
    """
    vanish = all(not p.evaluate(point) for p in (F.partial(i) for i in range(F.nvars)))
    rank = linear_part_rank(F, point)
    G = F
    if not getattr(F.field, "is_finite", False):
        if search_field is None:
            raise DomainError("a finite search field is needed for a form over QQ")
        G = F.reduce_mod(search_field)
    pts = singular_point_search(G, extension_bound, budget)
    return WitnessReport(F, point, list(a), vanish, rank, pts)


def find_singular_witness(n: int, m: int, field, seed: int = 0, extension_bound: int = 2,
                          max_tries: int = 20, budget: int = DEFAULT_BUDGET) -> WitnessReport:
    """Draw random nonzero a_i until the witness verifies (retrying on non-generic a)."""
    if not getattr(field, "is_finite", False):
        raise DomainError("random witness search needs a finite field")
    rng = random.Random(seed)
    report = None
    for attempt in range(1, max_tries + 1):
        a = [field.random_element(rng, nonzero=True) for _ in range(n)]
        F, point = generate_singular_witness(n, m, field, a)
        report = verify_witness(F, point, a, extension_bound, budget=budget)
        report.tries = attempt
        if report.passed:
            return report
    return report
