from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from cycov import chargroups as cg
from cycov.errors import DomainError
from cycov.exactcore import GF, QQ
from cycov.exactcore import linalg


@pytest.mark.parametrize("n, d, k", [(1, 1, 1), (1, 2, 1), (1, 3, 3), (2, 3, 1), (2, 4, 4)])
def test_uniform_char_index(n, d, k):
    assert cg.uniform_char_index(n, d) == k


@pytest.mark.parametrize("d1, d2, v1, v2, case", [
    (1, 1, (1, 1), (0, 1), cg.ODD),
    (2, 2, (2, 1), (0, 1), cg.EVEN),
    (3, 2, (2, 4), (0, 3), cg.ODD),
    (3, 3, (3, 6), (0, 3), cg.ODD),
])
def test_gamma_lattice_examples(d1, d2, v1, v2, case):
    L = cg.gamma_lattice(d1, d2)
    assert (L.v1.coords, L.v2.coords, L.parity_case) == (v1, v2, case)


def test_gamma_lattice_swap_error():
    with pytest.raises(DomainError, match="swap"):
        cg.gamma_lattice(2, 3)


def test_gamma_lattice_grid():
    for d1 in range(1, 13):
        for d2 in range(1, 13):
            if d1 % 2 == 0 and d2 % 2 == 1:
                continue
            L = cg.gamma_lattice(d1, d2)
            assert L.index() == cg.congruence_index(d1, d2)
            # brute force: every member of a box is an integral combination of v1, v2
            for x1 in range(-2 * d2, 2 * d2 + 1):
                for x2 in range(-d1, d1 + 1):
                    c = cg.Character("e", (x1, x2))
                    if L.contains(c):
                        assert cg.from_v_basis(cg.to_v_basis(c, L)) == c
                    else:
                        with pytest.raises(DomainError, match="not Γ-invariant"):
                            cg.to_v_basis(c, L)


def test_cone_class_examples():
    assert cg.cone_class_e(0, 0, 2, 2).coords == (0, 0)
    assert cg.cone_class_e(2, 0, 2, 2).coords == (4, -2)
    assert cg.cone_class_e(2, 2, 2, 2).coords == (-4, -4)
    with pytest.raises(DomainError, match="non-integral class"):
        cg.cone_class_e(1, 0, 2, 1)


def test_to_v_examples():
    L = cg.gamma_lattice(2, 2)
    assert cg.to_v_basis(cg.Character("e", (4, -2)), L).coords == (2, -4)
    assert cg.to_v_basis(cg.Character("e", (-4, -4)), L).coords == (-2, -2)
    assert cg.to_v_basis(L.v1, L).coords == (1, 0)


def test_even_closed_form_matches_cone_classes():
    for d1 in range(2, 13, 2):
        for d2 in range(2, 13, 2):
            L = cg.gamma_lattice(d1, d2)
            for a1 in range(0, 7):
                for a2 in range(0, 7):
                    try:
                        c = cg.cone_class_e(a1, a2, d1, d2)
                    except DomainError:
                        continue
                    if not L.contains(c):
                        continue
                    assert tuple(cg.to_v_basis(c, L).coords) == cg.closed_form_v(a1, a2, d1, d2)


# --- GL_{n+1}/mu_d descriptions ----------------------------------------------------

def test_isom_identity_and_mu2():
    K = QQ
    I = linalg.identity(2, K)
    assert cg.isom_map(I, 1, 2, K) == (K.one, cg.projective_normalize(I))
    minus = [[K(-1), K(0)], [K(0), K(-1)]]
    # d = 2 = 0 mod 2: (det^q, [A]) with q = 1, and -I goes to (1, [I])
    assert cg.isom_map(minus, 1, 2, K) == cg.isom_map(I, 1, 2, K)


@pytest.mark.parametrize("n, d, field", [
    (1, 2, QQ), (1, 3, QQ), (2, 4, GF(101)), (2, 5, GF(101)), (2, 3, GF(7)),
    (3, 4, GF(13)), (1, 5, GF(11)), (3, 7, GF(29)),
])
def test_isom_check_passes(n, d, field):
    rep = cg.isom_check(n, d, samples=15, field=field, seed=1)
    assert rep.passed, rep.witness
    assert rep.case == cg.isom_case(n, d)[0]


def test_isom_check_catches_wrong_map():
    def wrong(A, n, d, field):
        return tuple(tuple(r) for r in A)  # ignores mu_d entirely

    rep = cg.isom_check(2, 4, samples=10, field=GF(101), seed=0, map_fn=wrong)
    assert not rep.passed
    assert rep.checks["kills_mu_d"] is False


@given(st.integers(1, 6), st.integers(1, 20))
def test_isom_case_covers_every_residue(n, d):
    r = d % (n + 1)
    if r in (0, 1, n):
        case, q = cg.isom_case(n, d)
        assert case in ("0", "+1", "-1")
        assert q >= 0
    else:
        with pytest.raises(DomainError):
            cg.isom_case(n, d)
