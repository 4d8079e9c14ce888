"""Binary forms: Sylvester resultant, discriminant, squarefreeness.

Resultant convention: for ``f = sum a_i x^i y^(m1-i)`` and
``g = sum b_j x^j y^(m2-j)`` the Sylvester matrix has ``m2`` shifted rows
of ``(a_m1, ..., a_0)`` followed by ``m1`` shifted rows of
``(b_m2, ..., b_0)``; the resultant is its determinant.  Leading
coefficients are kept even when they vanish, so a common zero at
``y = 0`` (the point at infinity of the chart ``y = 1``) is detected too.
With this convention ``Res(x, y) = 1`` and
``Res(g, f) = (-1)^(m1*m2) Res(f, g)``.

The discriminant used here is ``Res(df/dx, df/dy)``.  It differs from the
classical discriminant by a unit factor and has the same zero locus.
"""

from __future__ import annotations

from ..errors import BadCharacteristic, DomainError
from ..exactcore import linalg, upoly
from .poly import Form


def _require_binary(f: Form, what: str = "form") -> None:
    if not isinstance(f, Form) or f.nvars != 2:
        raise DomainError(f"{what} must be a binary form (2 variables)")


def check_characteristic(field, *numbers: int) -> None:
    """Raise unless the field characteristic divides none of ``numbers``."""
    p = field.characteristic
    if p:
        for m in numbers:
            if m % p == 0:
                raise BadCharacteristic(
                    f"bad characteristic: {p} divides {m}"
                )


def binary_coeffs(f: Form) -> list:
    """Coefficients of ``x^m, x^(m-1) y, ..., y^m``."""
    _require_binary(f)
    m = f.degree
    return [f.terms.get((m - i, i), f.field.zero) for i in range(m + 1)]


def dehomogenize(f: Form) -> list:
    """``f(x, 1)`` as a dense univariate list (low degree first)."""
    m = f.degree
    return upoly.trim([f.terms.get((i, m - i), f.field.zero) for i in range(m + 1)])


def sylvester_matrix(f: Form, g: Form) -> list[list]:
    _require_binary(f)
    _require_binary(g)
    m1, m2 = f.degree, g.degree
    size = m1 + m2
    zero = f.field.zero
    a, b = binary_coeffs(f), binary_coeffs(g)
    rows = []
    for i in range(m2):
        rows.append([zero] * i + a + [zero] * (size - m1 - 1 - i))
    for i in range(m1):
        rows.append([zero] * i + b + [zero] * (size - m2 - 1 - i))
    return rows


def sylvester_resultant(f: Form, g: Form):
    _require_binary(f)
    _require_binary(g)
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of zero form undefined")
    if f.field is not g.field:
        raise DomainError("forms over different fields")
    if f.degree + g.degree == 0:
        return f.field.one
    return linalg.det(sylvester_matrix(f, g), f.field)


def disc_binary(f: Form):
    """``Res(df/dx, df/dy)``; zero iff ``f`` has a repeated projective root."""
    _require_binary(f)
    m = f.degree
    if m < 2:
        raise DomainError(f"discriminant needs degree >= 2, got {m}")
    if f.is_zero():
        raise DomainError("discriminant of the zero form")
    check_characteristic(f.field, m)
    fx, fy = f.partial(0), f.partial(1)
    if fx.is_zero() or fy.is_zero():
        # the other partial has degree m-1 >= 1, hence a zero over the closure
        return f.field.zero
    return sylvester_resultant(fx, fy)


def infinity_multiplicity(f: Form) -> int:
    """Multiplicity of the root ``(1:0)``, i.e. the power of ``y`` dividing f."""
    return min(e[1] for e in f.terms)


def is_squarefree_binary(f: Form) -> bool:
    """Independent check via ``gcd(u, u')`` of ``u(x) = f(x, 1)``.

    The root at infinity is handled separately through the power of ``y``
    dividing ``f``.
    """
    _require_binary(f)
    if f.is_zero():
        raise DomainError("squarefreeness of the zero form")
    m = f.degree
    if m >= 2:
        check_characteristic(f.field, m)
    if infinity_multiplicity(f) >= 2:
        return False
    u = dehomogenize(f)
    if len(u) <= 2:
        return True
    return len(upoly.gcd(u, upoly.derivative(u))) == 1


def common_root(f: Form, g: Form) -> bool:
    """True iff ``f`` and ``g`` share a projective zero over the closure."""
    if f.degree == 0 or g.degree == 0:
        return False
    return not sylvester_resultant(f, g)
