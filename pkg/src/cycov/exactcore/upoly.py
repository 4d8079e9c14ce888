"""Dense univariate polynomials over a field.

A polynomial is a list of field elements, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.  These are helpers for the
binary-form routines and for root finding in finite fields, not a general
polynomial type.
"""

from __future__ import annotations

import random

from .fields import FiniteField


def trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: list) -> int:
    return len(a) - 1


def add(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    return trim([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def sub(a: list, b: list) -> list:
    return add(a, [-y for y in b])


def mul(a: list, b: list, zero) -> list:
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return trim(out)


def divmod_(a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    zero = b[-1] * 0
    db = len(b) - 1
    if len(a) <= db:
        return [], trim(a)
    inv = 1 / b[-1]
    q = [zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = a[i - db + j] - c * b[j]
    return trim(q), trim(a[:db])


def rem(a: list, b: list) -> list:
    return divmod_(a, b)[1]


def monic(a: list) -> list:
    if not a:
        return []
    inv = 1 / a[-1]
    return [c * inv for c in a]


def gcd(a: list, b: list) -> list:
    """Monic gcd (``[]`` if both are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(a: list) -> list:
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a: list, x):
    acc = x * 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def powmod(base: list, e: int, m: list, one) -> list:
    result = [one]
    base = rem(base, m)
    zero = one * 0
    while e:
        if e & 1:
            result = rem(mul(result, base, zero), m)
        base = rem(mul(base, base, zero), m)
        e >>= 1
    return rem(result, m)


def roots(a: list, field: FiniteField, seed: int = 0) -> list:
    """All distinct roots of ``a`` lying in the finite field, sorted by code.

    Restricts to the product of linear factors via ``gcd(a, x^q - x)`` and
    splits it with Cantor-Zassenhaus (odd q) or the trace map (q even).
    """
    a = trim(a)
    if not a:
        raise ValueError("the zero polynomial has every element as a root")
    if len(a) == 1:
        return []
    one, zero = field.one, field.zero
    x = [zero, one]
    xq = powmod(x, field.order, a, one)
    split = gcd(a, sub(xq, x))
    rng = random.Random(seed)
    found = []
    _split(split, field, rng, found)
    return sorted(found, key=lambda r: r.to_int())


def _split(f: list, field: FiniteField, rng: random.Random, out: list) -> None:
    d = len(f) - 1
    if d <= 0:
        return
    if d == 1:
        out.append(-f[0] / f[1])
        return
    one, zero = field.one, field.zero
    q = field.order
    while True:
        c = field.random_element(rng)
        if field.p == 2:
            if not c:
                continue
            t = [zero, c]
            s = list(t)
            for _ in range(field.k - 1):
                t = rem(mul(t, t, zero), f)
                s = add(s, t)
            g = gcd(f, s)
        else:
            h = powmod([c, one], (q - 1) // 2, f, one)
            g = gcd(f, sub(h, [one]))
        if 0 < len(g) - 1 < d:
            break
    _split(g, field, rng, out)
    _split(divmod_(f, g)[0], field, rng, out)
