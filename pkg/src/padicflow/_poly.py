"""Dense truncated polynomial arithmetic over exact coefficients.

Polynomials are plain lists indexed by degree.  Everything here works for
int and Fraction coefficients alike and truncates at a fixed order, which
is all the formal-group and q-expansion code needs.
"""

from __future__ import annotations


def ptrim(a: list, order: int) -> list:
    return a[:order]


def padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] += c
    return out


def pscale(a: list, k) -> list:
    return [k * c for c in a]


def pmul(a: list, b: list, order: int) -> list:
    out = [0] * min(order, max(len(a) + len(b) - 1, 1))
    for i, ca in enumerate(a):
        if ca == 0 or i >= order:
            continue
        top = min(len(b), order - i)
        for j in range(top):
            cb = b[j]
            if cb != 0:
                out[i + j] += ca * cb
    return out


def ppow(a: list, n: int, order: int) -> list:
    result = [1]
    base = ptrim(a, order)
    while n:
        if n & 1:
            result = pmul(result, base, order)
        base = pmul(base, base, order)
        n >>= 1
    return result


def pinv_unit(a: list, order: int):
    """Inverse of a unit series to the given order.

    Stays integral when a[0] == 1 and the input is integral; otherwise
    coefficients follow whatever division the coefficient type provides.
    """
    if not a or a[0] == 0:
        raise ValueError("series inverse needs a unit constant term")
    inv0 = 1 if a[0] == 1 else 1 / a[0]
    inv = [inv0]
    for k in range(1, order):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * inv[k - i]
        inv.append(-inv0 * acc)
    return inv


def pcoeff(a: list, k: int):
    return a[k] if k < len(a) else 0
