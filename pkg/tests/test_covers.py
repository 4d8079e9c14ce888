from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, strategies as st

from cycov import covers
from cycov.errors import BadCharacteristic, DomainError
from cycov.exactcore import GF, QQ
from cycov.exactcore import linalg
from cycov.forms import Form, Poly, act_linear, disc_binary, random_form, singular_point_search


def xy(field=QQ):
    return Poly.var(2, 0, field), Poly.var(2, 1, field)


def const_form(nv, c=1, field=QQ):
    return Form(nv, 0, {(0,) * nv: c}, field)


# --- algebras ---------------------------------------------------------------

def test_uniform_rank_one_and_double_cover():
    x, y = xy()
    F = x * y
    alg = covers.build_uniform_algebra(covers.UniformCoverSpec(1, 1, 2, F))
    assert alg.rank == 1 and alg.table[(0, 0)][0] == Poly.constant(2, 1)
    alg = covers.build_uniform_algebra(covers.UniformCoverSpec(1, 2, 1, F))
    assert alg.table[(1, 1)] == (F, Poly(2, {}, QQ))
    assert alg.audit().passed and alg.is_commutative() and alg.is_unital() and alg.grading_ok()


def test_kummer_algebra_of_mu3():
    one = const_form(2)
    alg = covers.build_uniform_algebra(covers.UniformCoverSpec(1, 3, 0, one))
    e = alg.basis_vector
    t, t2 = e(1), e(2)
    assert alg.multiply(t, t) == t2
    assert alg.multiply(t2, t2) == t
    assert alg.multiply(t, t2) == e(0)
    assert alg.audit().passed


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_uniform_algebra_associative(r):
    rng = random.Random(r)
    F = random_form(3, r * 2, GF(101), rng, density=0.3)
    alg = covers.build_uniform_algebra(covers.UniformCoverSpec(2, r, 2, F))
    assert alg.audit().passed and alg.grading_ok()


def test_uniform_spec_validation():
    x, y = xy()
    with pytest.raises(DomainError):
        covers.UniformCoverSpec(1, 2, 2, x * y)  # degree 2, expected 4
    with pytest.raises(DomainError):
        covers.UniformCoverSpec(2, 2, 1, x * y)  # wrong number of variables


def test_triple_algebra_associator_law():
    x, y = xy()
    alg, audit = covers.build_triple_algebra(x, y)
    assert audit.passed and alg.is_commutative() and alg.is_unital() and alg.grading_ok()
    one = const_form(2)
    alg, audit = covers.build_triple_algebra(one, one, Poly.constant(2, 1))
    assert audit.passed
    alg, audit = covers.build_triple_algebra(x, y, x * y + Poly.constant(2, 1))
    assert not audit.passed
    # (t1 t1) t2 - t1 (t1 t2) = f1 t2^2 - h t1 = (f1 f2 - h) t1
    vec = audit.associators[(1, 1, 2)]
    assert vec[1] == Poly.constant(2, -1)
    json.dumps(audit.to_json(alg.labels))


@given(st.integers(0, 10**6))
def test_triple_audit_iff_h_is_product(seed):
    rng = random.Random(seed)
    K = GF(101)
    f1 = random_form(2, rng.randint(0, 4), K, rng)
    f2 = random_form(2, rng.randint(0, 4), K, rng)
    if f1.is_zero() or f2.is_zero():
        return
    assert covers.build_triple_algebra(f1, f2)[1].passed
    delta = random_form(2, f1.degree + f2.degree, K, rng)
    _, audit = covers.build_triple_algebra(f1, f2, f1 * f2 + delta)
    assert audit.passed == delta.is_zero()


# --- smoothness verdicts ------------------------------------------------------------

def test_uniform_smooth_binary_examples():
    x, y = xy()
    v = covers.is_smooth_uniform(covers.UniformCoverSpec(1, 2, 2, x * y * (x - y) * (x + y)))
    assert v.smooth and v.strength == "exact"
    v = covers.is_smooth_uniform(covers.UniformCoverSpec(1, 2, 2, x**2 * (x - y) * (x + y)))
    assert not v.smooth and v.strength == "exact"


def test_uniform_smooth_fermat_sextic():
    K = GF(7)
    xs = [Poly.var(3, i, K) for i in range(3)]
    F = xs[0] ** 6 + xs[1] ** 6 + xs[2] ** 6
    v = covers.is_smooth_uniform(covers.UniformCoverSpec(2, 2, 3, F), extension_bound=2)
    assert v.smooth and v.strength == "bounded" and v.extension_bound == 2
    assert v.to_json()["smooth"] is True


def test_uniform_singular_has_witness():
    K = GF(11)
    xs = [Poly.var(3, i, K) for i in range(3)]
    F = xs[0] ** 2 * xs[1] ** 2 + xs[1] ** 4 + xs[2] ** 4  # singular at (1:0:0)
    v = covers.is_smooth_uniform(covers.UniformCoverSpec(2, 2, 2, F))
    assert not v.smooth and v.strength == "exact"
    assert v.witness.codes() == (1, 0, 0)


def test_uniform_bad_characteristic():
    K = GF(3)
    x, y = xy(K)
    with pytest.raises(BadCharacteristic):
        covers.is_smooth_uniform(covers.UniformCoverSpec(1, 3, 1, x**3 + y**3))


def _has_multiple_root(F):
    # degree <= 4 over GF(5): a repeated root lies in GF(25)
    for k in (1, 2):
        K = GF(5, k)
        G = F.map_coeffs(lambda c: K(c.to_int()), K)
        fx, fy = G.partial(0), G.partial(1)
        for P in [(K.one, K.zero)] + [(a, K.one) for a in K.elements()]:
            if not G.evaluate(P) and not fx.evaluate(P) and not fy.evaluate(P):
                return True
    return False


def test_uniform_binary_verdict_against_brute_force():
    rng = random.Random(2)
    K = GF(5)
    for _ in range(60):
        F = random_form(2, 4, K, rng, density=0.6)
        if F.is_zero():
            continue
        v = covers.is_smooth_uniform(covers.UniformCoverSpec(1, 2, 2, F))
        assert v.smooth == (not _has_multiple_root(F))


def test_verdict_invariant_under_linear_action():
    rng = random.Random(9)
    K = GF(101)
    for _ in range(20):
        F = random_form(2, 6, K, rng)
        if rng.random() < 0.4:
            g = random_form(2, 1, K, rng)
            F = g * g * random_form(2, 4, K, rng)
        if F.is_zero():
            continue
        spec = covers.UniformCoverSpec(1, 2, 3, F)
        base = covers.is_smooth_uniform(spec).smooth
        while True:
            A = [[K.random_element(rng) for _ in range(2)] for _ in range(2)]
            if linalg.det(A, K):
                break
        G = act_linear(F, A)
        assert covers.is_smooth_uniform(covers.UniformCoverSpec(1, 2, 3, G)).smooth == base


def test_triple_smoothness_examples():
    x, y = xy()
    assert covers.is_smooth_triple(covers.TripleCoverSpec.from_forms(x, y)).smooth
    v = covers.is_smooth_triple(covers.TripleCoverSpec.from_forms(x, x))
    assert not v.smooth and "common zero" in v.reason
    spec = covers.TripleCoverSpec(2, 1, x**2 * y, const_form(2))
    v = covers.is_smooth_triple(spec)
    assert not v.smooth and "multiple zero" in v.reason


def test_triple_spec_from_forms():
    x, y = xy()
    spec = covers.TripleCoverSpec.from_forms(x**2 + y**2, x**2 - y**2)
    assert (spec.d1, spec.d2) == (2, 2)
    with pytest.raises(DomainError):
        covers.TripleCoverSpec.from_forms(x, x**2)


# --- singular witness ------------------------------------------------------------

def test_witness_over_qq_reduced_mod_101():
    F, P = covers.generate_singular_witness(2, 4, QQ, [1, 1])
    assert all(not F.partial(i).evaluate(P) for i in range(3))
    assert covers.linear_part_rank(F, P) == 2
    rep = covers.verify_witness(F, P, [1, 1], extension_bound=2, search_field=GF(101))
    assert rep.passed and rep.only_expected
    json.dumps(rep.to_json())


def test_witness_nongeneric_coefficients_fail():
    # a = (1, -1) with m = 4: x1 = x2 = s with s^2 = 1/2 gives a second singular point
    K = GF(7)
    F, P = covers.generate_singular_witness(2, 4, K, [1, -1])
    rep = covers.verify_witness(F, P, [1, -1], extension_bound=2)
    assert rep.partials_vanish and rep.linear_rank == 2
    assert not rep.only_expected


def test_witness_validation():
    with pytest.raises(DomainError):
        covers.generate_singular_witness(2, 2, GF(101), [1, 1])
    with pytest.raises(DomainError):
        covers.generate_singular_witness(2, 4, GF(101), [1, 0])
    with pytest.raises(BadCharacteristic):
        covers.generate_singular_witness(2, 5, GF(3), [1, 1])
    with pytest.raises(DomainError):
        covers.find_singular_witness(2, 4, QQ)


def test_find_witness_small_field_is_deterministic():
    a = covers.find_singular_witness(2, 4, GF(13), seed=4)
    b = covers.find_singular_witness(2, 4, GF(13), seed=4)
    assert a.to_json() == b.to_json()
    assert a.passed
