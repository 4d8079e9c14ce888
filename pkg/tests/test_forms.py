from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cycov.errors import BadCharacteristic, DomainError, SearchBudgetExceeded
from cycov.exactcore import GF, QQ
from cycov.exactcore import linalg, upoly
from cycov.forms import (Form, Poly, TwistSpec, act_linear, common_root, disc_binary,
                         embedding, format_form, is_squarefree_binary, parse_form, partials,
                         random_form, singular_point_search, sylvester_resultant)


def xy(field=QQ):
    return Poly.var(2, 0, field), Poly.var(2, 1, field)


def random_matrix(n, field, rng):
    while True:
        A = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(A, field):
            return A


# --- polynomial basics --------------------------------------------------------

def test_form_type_is_preserved():
    x, y = xy()
    f = x**2 + x * y
    assert isinstance(f, Form) and f.degree == 2
    g = f + Poly.constant(2, 1)
    assert not isinstance(g, Form)
    with pytest.raises(DomainError):
        Form(2, 2, {(1, 0): 1})


def test_text_round_trip():
    K = GF(101, 2)
    rng = random.Random(3)
    for field in (QQ, GF(7), K):
        for _ in range(5):
            F = random_form(3, 4, field, rng, density=0.5)
            if F.is_zero():
                continue
            assert parse_form(format_form(F)) == F
    F = parse_form("# comment\n1/2 2,0\n-3 1,1\n\n")
    assert F.terms[(2, 0)] == Fraction(1, 2) and F.terms[(1, 1)] == -3
    with pytest.raises(DomainError):
        parse_form("1 2,0\n1 1,0\n")
    with pytest.raises(DomainError):
        parse_form("1 mod 7 2,0\n1 mod 5 0,2\n")


def test_partials_examples():
    x0, x1 = xy()
    F = x0**5
    assert partials(F) == [5 * x0**4, Poly(2, {}, QQ)]
    assert partials(x0 * x1) == [x1, x0]


@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(1, 3))
def test_euler_identity(seed, m, nv):
    rng = random.Random(seed)
    F = random_form(nv + 1, m, QQ, rng)
    xs = [Poly.var(nv + 1, i) for i in range(nv + 1)]
    lhs = sum((xs[i] * F.partial(i) for i in range(nv + 1)), Poly(nv + 1, {}, QQ))
    assert lhs == F * m


# --- linear action --------------------------------------------------------------

def test_act_linear_examples():
    x, y = xy()
    f = x**3 + 2 * x * y**2
    assert act_linear(f, [[1, 0], [0, 1]]) == f
    assert act_linear(f, [[5, 0], [0, 5]]) == f * Fraction(1, 125)
    assert act_linear(x**2, [[1, 1], [0, 1]]) == (x - y) ** 2
    with pytest.raises(DomainError, match="non-invertible matrix"):
        act_linear(f, [[1, 2], [2, 4]])
    with pytest.raises(DomainError):
        act_linear(f, [[1, 0], [0, 1]], twist=TwistSpec(scalar_exponent=1))


def test_act_linear_twist():
    x, y = xy()
    f = x * y
    g = act_linear(f, [[2, 0], [0, 1]], alpha=3, twist=TwistSpec(det_exponent=1, scalar_exponent=2))
    # 3^2 * 2 * (x/2) y
    assert g == x * y * 9


@given(st.integers(0, 10**6))
def test_act_linear_is_a_group_action(seed):
    rng = random.Random(seed)
    K = GF(101)
    F = random_form(3, 3, K, rng)
    A, B = random_matrix(3, K, rng), random_matrix(3, K, rng)
    tw = TwistSpec(det_exponent=2)
    assert act_linear(act_linear(F, A, twist=tw), B, twist=tw) == \
        act_linear(F, linalg.matmul(B, A), twist=tw)


# --- resultants and discriminants -------------------------------------------------

def test_resultant_examples():
    x, y = xy()
    assert sylvester_resultant(x, y) == 1
    f = x**3 - 2 * x * y**2 + y**3
    assert sylvester_resultant(f, f) == 0
    assert sylvester_resultant(x**2 + y**2, x - y) == 2
    with pytest.raises(DomainError, match="resultant of zero form undefined"):
        sylvester_resultant(Form(2, 2, {}), x)


@given(st.integers(0, 10**6))
def test_resultant_sign_and_multiplicativity(seed):
    rng = random.Random(seed)
    K = GF(101)
    a, b, c = (random_form(2, rng.randint(1, 4), K, rng) for _ in range(3))
    if any(p.is_zero() for p in (a, b, c)):
        return
    sign = (-1) ** (a.degree * b.degree)
    assert sylvester_resultant(b, a) == sylvester_resultant(a, b) * sign
    assert sylvester_resultant(a * b, c) == sylvester_resultant(a, c) * sylvester_resultant(b, c)


def test_resultant_detects_root_at_infinity():
    x, y = xy()
    # both vanish at (1:0) although their dehomogenizations are coprime
    assert sylvester_resultant(x * y, y * (x + y)) == 0
    assert common_root(y * x, y**2 + x * y)


def test_disc_examples():
    x, y = xy()
    for m in (2, 3, 5):
        assert disc_binary(x**m) == 0
    assert disc_binary(x * y) != 0
    q = x**2 + x * y + y**2
    assert disc_binary(q) != 0
    assert disc_binary(q.reduce_mod(GF(3))) == 0
    with pytest.raises(BadCharacteristic, match="bad characteristic"):
        disc_binary((x**3 + y**3).reduce_mod(GF(3)))
    with pytest.raises(DomainError):
        disc_binary(x)


def test_disc_over_f3_by_root_check():
    # x^2 + xy + y^2 = (x - y)^2 over GF(3); brute-force roots in GF(9)
    K = GF(3, 2)
    u = [K.one, K.one, K.one]
    rts = [a for a in K.elements() if not upoly.evaluate(u, a)]
    assert len(rts) == 1
    d = upoly.derivative(u)
    assert not upoly.evaluate(d, rts[0])


def test_squarefree_examples():
    x, y = xy()
    assert not is_squarefree_binary(x**2 * y)
    assert is_squarefree_binary(x * y * (x - y))
    assert not is_squarefree_binary(x * y**2)


def _multiple_root_oracle(f):
    """Repeated projective root over GF(5^k), k <= 3, by brute force (degree <= 6)."""
    K0 = f.field
    for k in (1, 2, 3):
        K = GF(K0.p, k)
        emb = embedding(K0, K)
        g = f.map_coeffs(emb, K)
        fx, fy = g.partial(0), g.partial(1)
        pts = [(K.one, K.zero)] + [(a, K.one) for a in K.elements()]
        for P in pts:
            if not g.evaluate(P) and not fx.evaluate(P) and not fy.evaluate(P):
                return True
    return False


def test_squarefree_against_brute_force_f5():
    # over GF(5) an irreducible factor of degree <= 3 splits in GF(125); use
    # degrees <= 4 with m not divisible by 5, so any repeated root lies in GF(5^k)
    rng = random.Random(11)
    K = GF(5)
    seen = {True: 0, False: 0}
    for _ in range(150):
        m = rng.choice([2, 3, 4])
        f = random_form(2, m, K, rng, density=0.7)
        if f.is_zero() or f.degree != m:
            continue
        if rng.random() < 0.3:
            g = random_form(2, 1, K, rng)
            h = random_form(2, m - 2, K, rng) if m > 2 else Form(2, 0, {(0, 0): 1}, K)
            if g.is_zero() or h.is_zero():
                continue
            f = g * g * h
        expect = not _multiple_root_oracle(f)
        assert is_squarefree_binary(f) == expect
        assert (disc_binary(f) != 0) == expect
        seen[expect] += 1
    assert seen[True] > 10 and seen[False] > 10


def test_disc_character_ratio_fixed_matrix():
    rng = random.Random(5)
    K = GF(101)
    for m in (2, 3, 4, 6):
        A = random_matrix(2, K, rng)
        dA = linalg.det(A, K)
        ratios = set()
        for _ in range(10):
            f = random_form(2, m, K, rng)
            D = disc_binary(f)
            if not D:
                continue
            ratio = disc_binary(act_linear(f, A)) / D
            assert ratio == dA ** (-m * (m - 1))
            ratios.add(ratio)
        assert len(ratios) == 1


# --- singular point search ---------------------------------------------------------

def brute_force_singular(F, field):
    """All normalized points of P^n(field) where every partial vanishes."""
    n = F.nvars
    parts = partials(F)
    out = []
    for lead in range(n):
        for tail in itertools.product(list(field.elements()), repeat=n - lead - 1):
            P = (field.zero,) * lead + (field.one,) + tail
            if all(not p.evaluate(P) for p in parts):
                out.append(tuple(c.to_int() for c in P))
    return sorted(out)


def test_projective_plane_has_57_points():
    K = GF(7)
    count = sum(1 for lead in range(3) for _ in itertools.product(range(7), repeat=2 - lead))
    assert count == 57
    x0, x1, x2 = (Poly.var(3, i, K) for i in range(3))
    F = x0**2 + x1**2 + x2**2
    found = [P.codes() for P in singular_point_search(F, 1)]
    assert found == brute_force_singular(F, K) == []


def test_search_x0sq_x1_over_f5():
    K = GF(5)
    x0, x1, x2 = (Poly.var(3, i, K) for i in range(3))
    F = x0**2 * x1
    found = [P.codes() for P in singular_point_search(F, 1)]
    assert found == brute_force_singular(F, K)
    assert (0, 0, 1) in found and (0, 1, 0) in found
    assert len(found) == 6  # the line x0 = 0


def test_search_linear_is_empty():
    K = GF(7)
    x0, x1, x2 = (Poly.var(3, i, K) for i in range(3))
    assert singular_point_search(x0 + 2 * x1 - x2, 2) == []


@pytest.mark.parametrize("seed", range(6))
def test_search_matches_brute_force_random(seed):
    rng = random.Random(seed)
    K = GF(5)
    F = random_form(3, 3, K, rng, density=0.4)
    if seed % 2:
        # drop x0^3, x0^2 x1, x0^2 x2 so that (1:0:0) is singular
        F = Form(3, 3, {e: c for e, c in F.terms.items() if e[0] < 2}, K)
    if F.is_zero():
        return
    found = singular_point_search(F, 2)
    base = [P.codes() for P in found if P.degree == 1]
    assert base == brute_force_singular(F, K)
    K2 = GF(5, 2)
    big = F.map_coeffs(embedding(K, K2), K2)
    ext = sorted(P.codes() for P in found if P.degree == 2)
    full = brute_force_singular(big, K2)
    only_ext = [c for c in full if not all(K2.from_int(v).in_subfield(1) for v in c)]
    assert ext == only_ext


def test_fermat_sextic_smooth_over_f7_and_f49():
    K = GF(7)
    x0, x1, x2 = (Poly.var(3, i, K) for i in range(3))
    F = x0**6 + x1**6 + x2**6
    assert singular_point_search(F, 2) == []


def test_search_budget():
    K = GF(7)
    F = Form(3, 4, {(2, 1, 1): 1}, K)  # x0^2 x1 x2, singular along lines
    with pytest.raises(SearchBudgetExceeded, match="enumeration budget"):
        singular_point_search(F, 1, budget=3)
    with pytest.raises(DomainError):
        singular_point_search(Form(3, 2, {(2, 0, 0): 1}), 1)
