from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from cycov.chowcalc import ChowRing, chow_mul, discriminant_degree, z_bidegree
from cycov.errors import DomainError


def test_truncation_and_expansion():
    R = ChowRing(("xi", "eta"), (2, 6))
    xi, eta = R.gen("xi"), R.gen("eta")
    assert chow_mul(xi, xi) == 0
    s = (xi + eta) ** 2
    assert s == 2 * xi * eta + eta * eta
    assert (2 * xi + eta) ** 2 == 4 * xi * eta + eta**2
    assert s.coefficient(xi=1, eta=1) == 2


@pytest.mark.parametrize("n, m, deg", [(1, 1, 0), (3, 1, 0), (1, 4, 6), (2, 3, 12)])
def test_discriminant_degree_examples(n, m, deg):
    assert discriminant_degree(n, m) == deg


def test_discriminant_degree_grid():
    for n in range(1, 7):
        for m in range(1, 31):
            assert discriminant_degree(n, m) == (n + 1) * (m - 1) ** n


def test_z_bidegree_examples():
    assert z_bidegree(1, 1) == (1, 1)
    assert z_bidegree(2, 2) == (2, 2)
    with pytest.raises(DomainError, match="invalid branch degrees"):
        z_bidegree(5, 1)


@given(st.integers(0, 30), st.integers(0, 30))
def test_z_bidegree_swap_and_closed_form(d1, d2):
    if 2 * d1 < d2 or 2 * d2 < d1:
        return
    assert z_bidegree(d2, d1) == z_bidegree(d1, d2)[::-1]
    assert z_bidegree(d1, d2) == (2 * d2 - d1, 2 * d1 - d2)


@given(st.integers(1, 4), st.integers(0, 5), st.integers(0, 5))
def test_binomial_coefficients(n, a, b):
    # coefficient of xi^k eta^(n-k) in (a xi + b eta)^n against the binomial theorem
    R = ChowRing(("xi", "eta"), (n + 1, n + 1))
    cls = (a * R.gen("xi") + b * R.gen("eta")) ** n
    for k in range(n + 1):
        assert cls.coefficient(xi=k, eta=n - k) == math.comb(n, k) * a**k * b ** (n - k)
