"""Character lattices of GL_{n+1}/mu_d and of Gamma(d1, d2).

Gamma(d1, d2) is the quotient of G_m x GL_2 by mu_{d1} x mu_{d2}, embedded
by (a1, a2) -> (a2/a1, a1 I).  Characters of G_m x GL_2 are written in the
e-basis: e1 is the projection to G_m, e2 is (alpha, A) -> det A.  A
character x1 e1 + x2 e2 descends to Gamma(d1, d2) iff
x1 = 2 x2 (mod d1) and x1 = 0 (mod d2).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exactcore import IntMatrix, hermite_normal_form, linalg, upoly
from .exactcore.fields import QQ

ODD = "odd-d1"
EVEN = "both-even"


@dataclass(frozen=True)
class Character:
    basis: str  # "det", "e" or "v"
    coords: tuple[int, ...]
    lattice: "GammaLattice | None" = field(default=None, compare=False)

    def __post_init__(self):
        rank = {"det": 1, "e": 2, "v": 2}.get(self.basis)
        if rank is None:
            raise DomainError(f"unknown basis {self.basis!r}")
        if len(self.coords) != rank:
            raise DomainError(f"{self.basis}-basis characters have {rank} coordinates")
        if self.basis == "v" and self.lattice is None:
            raise DomainError("v-basis characters must carry their lattice")


@dataclass(frozen=True)
class GammaLattice:
    d1: int
    d2: int
    parity_case: str
    v1: Character
    v2: Character

    def contains(self, c: Character | tuple[int, int]) -> bool:
        x1, x2 = c.coords if isinstance(c, Character) else c
        return (x1 - 2 * x2) % self.d1 == 0 and x1 % self.d2 == 0

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix.from_rows([self.v1.coords, self.v2.coords])

    def index(self) -> int:
        return abs(self.basis_matrix().det())


def uniform_char_index(n: int, d: int) -> int:
    """Index of the characters of GL_{n+1}/mu_d among those of GL_{n+1}.

    mu_d meets SL_{n+1} in a group of order gcd(d, n+1), so det^k descends
    iff d / gcd(d, n+1) divides k.
    """
    if n < 1 or d < 1:
        raise DomainError("need n >= 1 and d >= 1")
    return d // math.gcd(d, n + 1)


def congruence_index(d1: int, d2: int) -> int:
    """Index in Z^2 of the congruence lattice, by counting residues.

    The lattice contains L * Z^2 with L = lcm(d1, d2), so the index is
    L^2 divided by the number of residue pairs mod L satisfying both
    congruences.
    """
    L = math.lcm(d1, d2)
    count = sum(
        1 for x1 in range(0, L, d2) for x2 in range(L) if (x1 - 2 * x2) % d1 == 0
    )
    return L * L // count


def gamma_lattice(d1: int, d2: int) -> GammaLattice:
    if d1 < 1 or d2 < 1:
        raise DomainError("branch degrees must be positive")
    if d1 % 2 == 1:
        case = ODD
        v1 = (d2, (d1 + 1) * d2 // 2)
        v2 = (0, d1)
    elif d2 % 2 == 0:
        case = EVEN
        v1 = (d2, d2 // 2)
        v2 = (0, d1 // 2)
    else:
        raise DomainError(
            f"d1={d1} even and d2={d2} odd: swap the branch degrees and use "
            f"({d2}, {d1}); the two stacks are isomorphic by twisting the mu_3 action"
        )
    L = GammaLattice(d1, d2, case, Character("e", v1), Character("e", v2))
    for v in (L.v1, L.v2):
        if not L.contains(v):
            raise AssertionError(f"basis vector {v.coords} violates the congruences")
    hnf = hermite_normal_form(L.basis_matrix())
    span_index = hnf[0, 0] * hnf[1, 1]
    if span_index != congruence_index(d1, d2):
        raise AssertionError("basis does not span the congruence lattice")
    return L


def cone_class_e(a1: int, a2: int, d1: int, d2: int) -> Character:
    """Character of an invariant cone of bidegree (a1, a2), in the e-basis.

    Substituting A = beta I into the action formula gives the e1 exponent
    (a1 - 2 a2) d2 and the det exponent
    -(a1 (2 d1 - d2) + a2 (2 d2 - d1)) / 2.
    """
    num = a1 * (2 * d1 - d2) + a2 * (2 * d2 - d1)
    if num % 2:
        raise DomainError("non-integral class")
    return Character("e", ((a1 - 2 * a2) * d2, -num // 2))


def to_v_basis(c: Character, L: GammaLattice) -> Character:
    if c.basis != "e":
        raise DomainError("expected an e-basis character")
    if not L.contains(c):
        raise DomainError("class not Γ-invariant")
    x1, x2 = c.coords
    (a, b), (_, e) = L.v1.coords, L.v2.coords
    m1, r1 = divmod(x1, a)
    m2, r2 = divmod(x2 - m1 * b, e)
    if r1 or r2:
        raise AssertionError("inexact change of basis for a lattice element")
    return Character("v", (m1, m2), L)


def from_v_basis(c: Character) -> Character:
    m1, m2 = c.coords
    L = c.lattice
    return Character(
        "e",
        (m1 * L.v1.coords[0] + m2 * L.v2.coords[0], m1 * L.v1.coords[1] + m2 * L.v2.coords[1]),
    )


def closed_form_v(a1: int, a2: int, d1: int, d2: int) -> tuple[Fraction, Fraction]:
    """The printed closed forms for the v-coordinates of a cone class.

    Reported for comparison only; the odd case does not agree with the
    e-basis derivation (it can even be non-integral).
    """
    if d1 % 2:
        return Fraction(a1 - 2 * a2), Fraction(-a1 + a2 * d2) + Fraction(a2 * a1 * d2, 2)
    return Fraction(a1 - 2 * a2), Fraction(-2 * a1 + a2)


# --- GL_{n+1}/mu_d isomorphisms --------------------------------------------

@dataclass
class IsomReport:
    n: int
    d: int
    case: str
    q: int
    passed: bool
    checks: dict = field(default_factory=dict)
    witness: object = None


def isom_case(n: int, d: int) -> tuple[str, int]:
    """Which closed-form isomorphism applies: ("0"|"+1"|"-1", q)."""
    m = n + 1
    if d % m == 0:
        return "0", d // m
    if d % m == 1:
        return "+1", (d - 1) // m
    if d % m == m - 1:
        return "-1", (d + 1) // m
    raise DomainError("no closed-form isomorphism given")


def _scale(A, c):
    return [[c * x for x in row] for row in A]


def projective_normalize(A):
    """Canonical representative of [A] in PGL: first nonzero entry scaled to 1."""
    first = next(x for row in A for x in row if x)
    inv = 1 / first
    return tuple(tuple(x * inv for x in row) for row in A)


def isom_map(A, n: int, d: int, field):
    """The map out of GL_{n+1}/mu_d evaluated on a matrix representative."""
    case, q = isom_case(n, d)
    det = linalg.det(A, field)
    if case == "0":
        return det**q, projective_normalize(A)
    e = q if case == "+1" else -q
    return tuple(tuple(x for x in row) for row in _scale(A, det**e))


def _image_identity(n: int, d: int, field):
    case, _ = isom_case(n, d)
    I = linalg.identity(n + 1, field)
    if case == "0":
        return field.one, projective_normalize(I)
    return tuple(tuple(r) for r in I)


def roots_of_unity(d: int, field) -> list:
    if field is QQ:
        return [field.one, -field.one] if d % 2 == 0 else [field.one]
    return upoly.roots([-field.one] + [field.zero] * (d - 1) + [field.one], field)


def _random_invertible(n: int, field, rng):
    while True:
        A = [[_rand(field, rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(A, field):
            return A


def _rand(field, rng):
    if field is QQ:
        return field(rng.randint(-9, 9))
    return field.random_element(rng)


def isom_check(n: int, d: int, samples: int = 20, field=QQ, seed: int = 0,
               map_fn=None) -> IsomReport:
    """Sample-based check of the closed-form description of GL_{n+1}/mu_d.

    Verifies multiplicativity on random pairs, that mu_d (as scalar
    matrices) maps to the identity, that the map is constant on mu_d-cosets,
    and for the GL_{n+1} targets that scalar multiples by non-roots of unity
    are separated (the only possible collisions, since equal images force
    the representatives to be proportional).  ``map_fn(A, n, d, field)``
    replaces the closed-form map, to check the checker.
    """
    case, q = isom_case(n, d)
    apply = map_fn or isom_map
    rng = random.Random(seed)
    N = n + 1
    zetas = roots_of_unity(d, field)
    ident = _image_identity(n, d, field)
    report = IsomReport(n, d, case, q, True)

    def fail(name, witness):
        report.passed = False
        report.checks[name] = False
        if report.witness is None:
            report.witness = {"check": name, "data": witness}

    report.checks.update(multiplicative=True, kills_mu_d=True, coset_constant=True)
    if case != "0":
        report.checks["separates_scalars"] = True

    for z in zetas:
        if apply(_scale(linalg.identity(N, field), z), n, d, field) != ident:
            fail("kills_mu_d", {"zeta": str(z)})

    for _ in range(samples):
        A = _random_invertible(N, field, rng)
        B = _random_invertible(N, field, rng)
        fa, fb = apply(A, n, d, field), apply(B, n, d, field)
        fab = apply(linalg.matmul(A, B), n, d, field)
        if case == "0":
            prod = (fa[0] * fb[0], projective_normalize(linalg.matmul(fa[1], fb[1])))
        else:
            prod = tuple(tuple(r) for r in linalg.matmul(fa, fb))
        if fab != prod:
            fail("multiplicative", {"A": str(A), "B": str(B)})
        for z in zetas:
            if apply(_scale(A, z), n, d, field) != fa:
                fail("coset_constant", {"A": str(A), "zeta": str(z)})
        if case != "0":
            c = _rand(field, rng)
            if c and c**d != field.one and apply(_scale(A, c), n, d, field) == fa:
                fail("separates_scalars", {"A": str(A), "c": str(c)})
    return report
