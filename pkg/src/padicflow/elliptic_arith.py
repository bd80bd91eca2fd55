"""Weierstrass curves over Q: invariants, formal expansion, Tate's algorithm,
L-series coefficients, Tate parameters and the fibre-product record.

Everything is exact rational arithmetic.  Point counts over F_p use naive
affine enumeration (a quadratic-character sum for odd p), bounded by
AP_BOUND primes; reduction types and conductor exponents come from the full
Tate algorithm with the non-minimality restart loop, so rational and
non-minimal input models are handled place by place.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import sympy

from ._poly import pcoeff, pinv_unit, pmul
from .errors import (
    BadReductionRequired,
    InsufficientOrder,
    NoCommonBadPrime,
    NotSemistable,
    PrimeTooLarge,
    SingularCurve,
)
from .padic_core import vp_fraction, vp_int
from .series_dynamics import TruncatedSeries

AP_BOUND = 10 ** 4


# ---------------------------------------------------------------------------
# curves and invariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with exact rationals."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def from_list(cls, coeffs) -> "WeierstrassCurve":
        if len(coeffs) != 5:
            raise ValueError("curve literal needs [a1,a2,a3,a4,a6]")
        return cls(*(Fraction(str(c)) for c in coeffs))

    @classmethod
    def from_literal(cls, text: str) -> "WeierstrassCurve":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"curve literal must look like [a1,a2,a3,a4,a6]: {text!r}")
        return cls.from_list([part.strip() for part in body[1:-1].split(",")])

    def coefficients(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def to_list(self) -> list:
        return [str(c) if c.denominator != 1 else c.numerator
                for c in self.coefficients()]

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coefficients()) + "]"


@dataclass(frozen=True)
class CurveInvariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    delta: Fraction
    j: Fraction


def _b_values(a1, a2, a3, a4, a6):
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = (a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4
          + a2 * a3 * a3 - a4 * a4)
    return b2, b4, b6, b8


def _delta_from_b(b2, b4, b6, b8):
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def discriminant(E: WeierstrassCurve) -> Fraction:
    """Discriminant, defined for singular equations as well."""
    return _delta_from_b(*_b_values(*E.coefficients()))


def invariants(E: WeierstrassCurve) -> CurveInvariants:
    """Full invariant pack b2..b8, c4, c6, delta, j of a non-singular curve."""
    b2, b4, b6, b8 = _b_values(*E.coefficients())
    c4 = b2 * b2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    delta = _delta_from_b(b2, b4, b6, b8)
    if delta == 0:
        raise SingularCurve(f"discriminant of {E} vanishes")
    return CurveInvariants(b2, b4, b6, b8, c4, c6, delta, c4 ** 3 / delta)


# ---------------------------------------------------------------------------
# formal group expansion and its inversion
# ---------------------------------------------------------------------------

def formal_expansion(E: WeierstrassCurve, order: int) -> TruncatedSeries:
    """Expansion w(z) = z^3 (1 + A_1 z + ...) of the curve near the origin.

    Fixed-point iteration of w <- z^3 + a1 z w + a2 z^2 w + a3 w^2
    + a4 z w^2 + a6 w^3, truncated at z^(3+order).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    a1, a2, a3, a4, a6 = E.coefficients()
    top = order + 4  # keep degrees < 3 + order + 1
    w = [0, 0, 0, Fraction(1)]
    for _ in range(order + 1):
        w2 = pmul(w, w, top)
        w3 = pmul(w2, w, top)
        new = [Fraction(0)] * top
        new[3] = Fraction(1)
        for k in range(top):
            acc = new[k]
            if k >= 1:
                acc += a1 * pcoeff(w, k - 1) + a4 * pcoeff(w2, k - 1)
            if k >= 2:
                acc += a2 * pcoeff(w, k - 2)
            acc += a3 * pcoeff(w2, k) + a6 * pcoeff(w3, k)
            new[k] = acc
        if new == w:
            break
        w = new
    assert w[3] == 1 and all(c == 0 for c in w[:3])
    return TruncatedSeries(tuple(w[4:4 + order]))


def series_to_curve(u: TruncatedSeries) -> WeierstrassCurve:
    """Invert the triangular system A_j(a_1,...,a_6) back to a curve.

    Each a_k first enters the expansion linearly with unit coefficient
    (a1 at A_1, a2 at A_2, a3 at A_3, a4 at A_4, a6 at A_6), so the curve
    is recovered by back-substitution against partial re-expansions.
    The order-5 coefficient carries no new unknown, hence order >= 6.
    """
    if u.truncation_order < 6:
        raise InsufficientOrder(
            f"need truncation order >= 6 to solve for a6, got {u.truncation_order}")
    A = [u.coefficient(j) for j in range(1, 7)]
    a1 = A[0]
    a2 = A[1] - formal_expansion(
        WeierstrassCurve(a1, 0, 0, 0, 0), 2).coefficient(2)
    a3 = A[2] - formal_expansion(
        WeierstrassCurve(a1, a2, 0, 0, 0), 3).coefficient(3)
    a4 = A[3] - formal_expansion(
        WeierstrassCurve(a1, a2, a3, 0, 0), 4).coefficient(4)
    a6 = A[5] - formal_expansion(
        WeierstrassCurve(a1, a2, a3, a4, 0), 6).coefficient(6)
    return WeierstrassCurve(a1, a2, a3, a4, a6)


# ---------------------------------------------------------------------------
# Tate's algorithm
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ReductionData:
    """Reduction type at one prime.

    ap_or_flag is a_p at good primes (None beyond the counting bound),
    +1 / -1 for split / nonsplit multiplicative reduction, 0 for additive.
    """

    prime: int
    kind: str  # good | multiplicative | additive
    conductor_exponent: int
    ap_or_flag: int | None

    def to_dict(self) -> dict:
        return {"p": self.prime, "kind": self.kind,
                "f": self.conductor_exponent, "ap": self.ap_or_flag}


def _smod(a: int, m: int) -> int:
    """Centered residue in (-m/2, m/2]."""
    a %= m
    if 2 * a > m:
        a -= m
    return a


def _transform(a, r, s, t):
    """Coordinate change x -> x + r, y -> y + s x + t (u = 1)."""
    a1, a2, a3, a4, a6 = a
    return (
        a1 + 2 * s,
        a2 - s * a1 + 3 * r - s * s,
        a3 + r * a1 + 2 * t,
        a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1,
    )


def _integral_model(E: WeierstrassCurve) -> tuple:
    """Integer model reachable by the u-substitution a_i -> u^i a_i."""
    u = lcm(*(c.denominator for c in E.coefficients()))
    scaled = [Fraction(c) * u ** k
              for c, k in zip(E.coefficients(), (1, 2, 3, 4, 6))]
    assert all(c.denominator == 1 for c in scaled)
    return tuple(int(c) for c in scaled)


def _vp(n: int, p: int) -> int:
    return 10 ** 9 if n == 0 else vp_int(n, p)


def _quadratic_has_root(b: int, c: int, p: int) -> bool:
    """Does T^2 + bT + c have a root mod p?"""
    if p == 2:
        return any((t * t + b * t + c) % 2 == 0 for t in (0, 1))
    disc = (b * b - 4 * c) % p
    return disc == 0 or pow(disc, (p - 1) // 2, p) == 1


def _move_singular_point(a, p):
    """Translate the singular point of the reduced equation to (0, 0)."""
    a1, a2, a3, a4, a6 = a
    if p in (2, 3):
        for x0 in range(p):
            for y0 in range(p):
                fval = (y0 * y0 + a1 * x0 * y0 + a3 * y0
                        - x0 ** 3 - a2 * x0 * x0 - a4 * x0 - a6)
                fx = a1 * y0 - 3 * x0 * x0 - 2 * a2 * x0 - a4
                fy = 2 * y0 + a1 * x0 + a3
                if fval % p == 0 and fx % p == 0 and fy % p == 0:
                    return _transform(a, _smod(x0, p), 0, _smod(y0, p))
        raise ArithmeticError("no singular point found mod small p")
    b2, b4, b6, _ = _b_values(*a)
    c4 = b2 * b2 - 24 * b4
    if c4 % p == 0:
        x0 = -b2 * pow(12, -1, p) % p
    else:
        x0 = (18 * b6 - b2 * b4) * pow(c4, -1, p) % p
    y0 = -(a1 * x0 + a3) * pow(2, -1, p) % p
    return _transform(a, _smod(x0, p), 0, _smod(y0, p))


def _normalize_additive(a, p):
    """Reach p|a1,a2, p^2|a3,a4, p^3|a6 by s- then t-translations."""
    a1, a2, a3, a4, a6 = a
    if p == 2:
        a = _transform(a, 0, a2 % 2, 0)
        for t in range(4):
            cand = _transform(a, 0, 0, t)
            if cand[2] % 4 == 0 and cand[4] % 8 == 0:
                a = cand
                break
        else:
            raise ArithmeticError("additive normalization failed at p=2")
    else:
        s = _smod(-a1 * pow(2, -1, p), p)
        a = _transform(a, 0, s, 0)
        t = _smod(-a[2] * pow(2, -1, p * p), p * p)
        a = _transform(a, 0, 0, t)
    a1, a2, a3, a4, a6 = a
    assert a1 % p == 0 and a2 % p == 0
    assert a3 % p ** 2 == 0 and a4 % p ** 2 == 0 and a6 % p ** 3 == 0
    return a


def _is_triple(b, c, d, t0, p):
    # T^3 + bT^2 + cT + d == (T - t0)^3 mod p
    return ((b + 3 * t0) % p == 0
            and (c - 3 * t0 * t0) % p == 0
            and (d + t0 ** 3) % p == 0)


def _cubic_root_structure(b: int, c: int, d: int, p: int):
    """Multiplicity pattern of T^3 + bT^2 + cT + d over F_p.

    Returns ("distinct", None), ("double", root) or ("triple", root);
    repeated roots of a monic cubic always lie in F_p.
    """
    b %= p
    c %= p
    d %= p
    if p <= 3:
        def poly(t):
            return (t ** 3 + b * t * t + c * t + d) % p

        for t0 in range(p):
            if poly(t0) == 0 and _is_triple(b, c, d, t0, p):
                return "triple", t0
        for t0 in range(p):
            if poly(t0) == 0 and (3 * t0 * t0 + 2 * b * t0 + c) % p == 0:
                return "double", t0
        return "distinct", None
    disc = (18 * b * c * d - 4 * b ** 3 * d + b * b * c * c
            - 4 * c ** 3 - 27 * d * d) % p
    if disc != 0:
        return "distinct", None
    sep = (b * b - 3 * c) % p  # (alpha - beta)^2 for roots alpha,alpha,beta
    if sep != 0:
        t0 = (9 * d - b * c) * pow(2 * sep, -1, p) % p
        return "double", t0
    t0 = -b * pow(3, -1, p) % p
    return "triple", t0


def _instar_loop(a, p):
    """Sub-procedure for the I_nu* types; returns (nu, final equation).

    Alternates a Y-quadratic and an X-quadratic test, translating while
    the tested quadratic keeps a double root.
    """
    a1, a2, a3, a4, a6 = a
    mx = p * p
    my = p * p
    nu = 1
    guard = 0
    while True:
        guard += 1
        if guard > 200:
            raise ArithmeticError("I_n* loop failed to terminate")
        a2t = a2 // p
        a3t = a3 // my
        a4t = a4 // (p * mx)
        a6t = a6 // (mx * my)
        # Y^2 + a3t Y - a6t
        if (a3t * a3t + 4 * a6t) % p != 0:
            return nu, (a1, a2, a3, a4, a6)
        gamma = a6t % 2 if p == 2 else _smod(-a3t * pow(2, -1, p), p)
        a1, a2, a3, a4, a6 = _transform(
            (a1, a2, a3, a4, a6), 0, 0, my * gamma)
        my *= p
        nu += 1
        assert a3 % my == 0 and a6 % (mx * my) == 0
        a2t = a2 // p
        a4t = a4 // (p * mx)
        a6t = a6 // (mx * my)
        # a2t X^2 + a4t X + a6t
        if (a4t * a4t - 4 * a2t * a6t) % p != 0:
            return nu, (a1, a2, a3, a4, a6)
        if p == 2:
            delta = a6t % 2
        else:
            delta = _smod(-a4t * pow(2 * a2t, -1, p), p)
        a1, a2, a3, a4, a6 = _transform(
            (a1, a2, a3, a4, a6), mx * delta, 0, 0)
        mx *= p
        nu += 1
        assert a4 % (p * mx) == 0 and a6 % (mx * my) == 0


def _ap_good(a, p):
    """a_p = p + 1 - #E(F_p) by direct enumeration at a good prime."""
    a1, a2, a3, a4, a6 = a
    if p == 2:
        count = 0
        for x in (0, 1):
            for y in (0, 1):
                if (y * y + a1 * x * y + a3 * y
                        - x ** 3 - a2 * x * x - a4 * x - a6) % 2 == 0:
                    count += 1
        return 2 - count  # p + 1 - (count + point at infinity)
    b2, b4, b6, _ = _b_values(*a)
    b2 %= p
    b4 %= p
    b6 %= p
    square = bytearray(p)
    for t in range((p + 1) // 2):
        square[t * t % p] = 1
    total = 0
    for x in range(p):
        d = (4 * x ** 3 + b2 * x * x + 2 * b4 * x + b6) % p
        if d == 0:
            continue
        total += 1 if square[d] else -1
    return -total


def tate_reduce(E: WeierstrassCurve, p: int, ap_bound: int = AP_BOUND) -> ReductionData:
    """Reduction kind, conductor exponent and a_p data at the prime p.

    Runs Tate's algorithm on an integral model, restarting after the
    non-minimality rescaling step, so the result refers to the local
    minimal model.
    """
    if discriminant(E) == 0:
        raise SingularCurve(f"{E} is singular")
    a = _integral_model(E)
    while True:
        b2, b4, b6, b8 = _b_values(*a)
        delta = _delta_from_b(b2, b4, b6, b8)
        n = _vp(delta, p)
        if n == 0:
            ap = _ap_good(a, p) if p <= ap_bound else None
            return ReductionData(p, "good", 0, ap)
        a = _move_singular_point(a, p)
        a1, a2, a3, a4, a6 = a
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0
        b2 = a1 * a1 + 4 * a2
        if b2 % p != 0:
            split = _quadratic_has_root(a1 % p, (-a2) % p, p)
            return ReductionData(p, "multiplicative", 1, 1 if split else -1)
        if _vp(a6, p) < 2:
            return ReductionData(p, "additive", n, 0)          # type II
        _, _, b6, b8 = _b_values(*a)
        if _vp(b8, p) < 3:
            return ReductionData(p, "additive", n - 1, 0)      # type III
        if _vp(b6, p) < 3:
            return ReductionData(p, "additive", n - 2, 0)      # type IV
        a = _normalize_additive(a, p)
        a1, a2, a3, a4, a6 = a
        kind, root = _cubic_root_structure(
            (a2 // p) % p, (a4 // p ** 2) % p, (a6 // p ** 3) % p, p)
        if kind == "distinct":
            return ReductionData(p, "additive", n - 4, 0)      # type I0*
        if kind == "double":
            a = _transform(a, p * _smod(root, p), 0, 0)
            nu, _ = _instar_loop(a, p)
            return ReductionData(p, "additive", n - 4 - nu, 0)  # type I_nu*
        # triple root
        a = _transform(a, p * _smod(root, p), 0, 0)
        a1, a2, a3, a4, a6 = a
        assert a2 % p ** 2 == 0 and a4 % p ** 3 == 0 and a6 % p ** 4 == 0
        a3t = a3 // p ** 2
        a6t = a6 // p ** 4
        if (a3t * a3t + 4 * a6t) % p != 0:
            return ReductionData(p, "additive", n - 6, 0)      # type IV*
        gamma = a6t % 2 if p == 2 else _smod(-a3t * pow(2, -1, p), p)
        a = _transform(a, 0, 0, p * p * gamma)
        a1, a2, a3, a4, a6 = a
        assert a3 % p ** 3 == 0 and a6 % p ** 5 == 0
        if _vp(a4, p) < 4:
            return ReductionData(p, "additive", n - 7, 0)      # type III*
        if _vp(a6, p) < 6:
            return ReductionData(p, "additive", n - 8, 0)      # type II*
        # non-minimal: rescale by u = p and start over
        a = (a1 // p, a2 // p ** 2, a3 // p ** 3, a4 // p ** 4, a6 // p ** 6)


def ap_count(E: WeierstrassCurve, p: int, ap_bound: int = AP_BOUND) -> int:
    """a_p at good p (|a_p| <= 2 sqrt p), the split flag at multiplicative p,
    0 at additive p."""
    if p > ap_bound:
        raise PrimeTooLarge(f"p = {p} beyond the counting bound {ap_bound}")
    data = tate_reduce(E, p, ap_bound=ap_bound)
    return data.ap_or_flag


# ---------------------------------------------------------------------------
# bad primes, conductor, L-series coefficients
# ---------------------------------------------------------------------------

def bad_reductions(E: WeierstrassCurve) -> dict:
    """Reduction data at every prime of bad reduction (of a minimal model)."""
    a = _integral_model(E)
    delta = _delta_from_b(*_b_values(*a))
    out = {}
    for p in sorted(sympy.factorint(abs(delta))):
        data = tate_reduce(E, p)
        if data.kind != "good":
            out[p] = data
    return out


def conductor(E: WeierstrassCurve) -> int:
    return int(sympy.prod(
        [p ** d.conductor_exponent for p, d in bad_reductions(E).items()]))


def l_coefficients(E: WeierstrassCurve, n_max: int, ap_bound: int = AP_BOUND):
    """Coefficient vector a(1..n_max) of the L-series of E.

    a(p) from point counts, prime powers by the Hecke recursion
    a(p^{k+1}) = a(p) a(p^k) - p a(p^{k-1}) at good p and a(p)^k at
    multiplicative p, additive powers vanish; multiplicative in coprime
    indices.  The vector's level is the conductor.
    """
    from .modular_proxy import CoefficientVector

    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    coeffs = [Fraction(0)] * (n_max + 1)
    coeffs[1] = Fraction(1)
    reductions = {}
    for p in sympy.primerange(2, n_max + 1):
        data = tate_reduce(E, p, ap_bound=ap_bound)
        if data.ap_or_flag is None:
            raise PrimeTooLarge(f"a_{p} needed but p beyond counting bound")
        reductions[p] = data
        ap = Fraction(data.ap_or_flag)
        power = p
        prev, cur = Fraction(1), ap
        k = 1
        while power <= n_max:
            coeffs[power] = cur
            power *= p
            k += 1
            if data.kind == "good":
                prev, cur = cur, ap * cur - p * prev
            elif data.kind == "multiplicative":
                cur = ap ** k
            else:
                cur = Fraction(0)
    for n in range(2, n_max + 1):
        p = next(q for q in range(2, n + 1) if n % q == 0)
        pk = p
        while n % (pk * p) == 0:
            pk *= p
        m = n // pk
        if m > 1:  # composite: multiplicative across the coprime split
            coeffs[n] = coeffs[pk] * coeffs[m]
    return CoefficientVector(level=conductor(E), coeffs=tuple(coeffs[1:]),
                             n_max=n_max)


# ---------------------------------------------------------------------------
# Tate parameter
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def j_expansion_coefficients(count: int) -> tuple:
    """Coefficients c_0..c_{count-1} of j(q) = 1/q + sum c_n q^n.

    Generated from E4^3 / Delta with integer series arithmetic; nothing is
    hard-coded, so c_0 = 744 and c_1 = 196884 come out of the quotient.
    """
    order = count + 1
    sigma3 = [0] * order
    for d in range(1, order):
        for m in range(d, order, d):
            sigma3[m] += d ** 3
    e4 = [1] + [240 * sigma3[n] for n in range(1, order)]
    e4cubed = pmul(pmul(e4, e4, order), e4, order)
    disc_unit = [1]  # Delta / q = prod (1 - q^n)^24
    for m in range(1, order):
        factor = [0] * (m + 1)
        factor[0] = 1
        factor[m] = -1
        for _ in range(24):
            disc_unit = pmul(disc_unit, factor, order)
    w = pmul(e4cubed, pinv_unit(disc_unit, order), order)
    assert w[0] == 1
    return tuple(w[1:count + 1])


@lru_cache(maxsize=None)
def tate_q_coefficients(terms: int) -> tuple:
    """h_1..h_terms with q = sum h_n j^{-n}, by inverting the j-expansion.

    Iterates q <- w (1 + sum c_i q^{i+1}) on series in w = 1/j; one order
    of accuracy is gained per pass.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    c = j_expansion_coefficients(terms)
    order = terms + 1
    q = [0, 1]  # series in w = 1/j
    for _ in range(terms + 1):
        correction = [1] + [0] * (order - 1)
        qpow = [1]
        for c_i in c:
            qpow = pmul(qpow, q, order)
            if c_i:
                for k, value in enumerate(qpow):
                    correction[k] += c_i * value
        new = ([0] + correction)[:order]
        if new == q:
            break
        q = new
    h = q[1:terms + 1]
    assert h[0] == 1
    return tuple(h)


def tate_parameter(j, terms: int, p: int) -> Fraction:
    """Tate parameter q = sum_{n<=terms} h_n j^{-n} for |j|_p > 1.

    The leading term forces v_p(q) = -v_p(j) > 0.
    """
    j = Fraction(j)
    if j == 0 or vp_fraction(j, p) >= 0:
        raise BadReductionRequired(
            f"need v_{p}(j) < 0, got j = {j}")
    h = tate_q_coefficients(terms)
    jin = 1 / j
    acc = Fraction(0)
    power = Fraction(1)
    for h_n in h:
        power *= jin
        acc += h_n * power
    return acc


# ---------------------------------------------------------------------------
# fibre-product factorization record
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactorizationRecord:
    """Common-prime factorization data for a semi-stable pair of curves.

    The record is a plain data carrier: the two coordinate projections are
    exposed as accessors, no categorical machinery.
    """

    q1: Fraction
    q2: Fraction
    level1: int
    level2: int
    common_prime: int

    def projection(self, side: int) -> dict:
        if side not in (1, 2):
            raise ValueError("side must be 1 or 2")
        q = self.q1 if side == 1 else self.q2
        level = self.level1 if side == 1 else self.level2
        return {"q": q, "level": level, "prime": self.common_prime}

    def to_dict(self) -> dict:
        return {
            "common_prime": self.common_prime,
            "q1": str(self.q1),
            "q2": str(self.q2),
            "level1": self.level1,
            "level2": self.level2,
        }


def semistable_bad_primes(E: WeierstrassCurve) -> list:
    """Multiplicative primes of a semi-stable curve; NotSemistable otherwise."""
    out = []
    for p, data in bad_reductions(E).items():
        if data.kind == "additive":
            raise NotSemistable(f"additive reduction at {p}")
        out.append(p)
    return out


def factorize(E1: WeierstrassCurve, E2: WeierstrassCurve,
              terms: int = 12) -> FactorizationRecord:
    """Pick the smallest common multiplicative prime and pair the tori.

    NoCommonBadPrime signals that the ground field would have to change.
    """
    bad1 = semistable_bad_primes(E1)
    bad2 = semistable_bad_primes(E2)
    common = sorted(set(bad1) & set(bad2))
    if not common:
        raise NoCommonBadPrime(
            f"bad primes {bad1} and {bad2} are disjoint")
    p = common[0]
    j1 = invariants(E1).j
    j2 = invariants(E2).j
    return FactorizationRecord(
        q1=tate_parameter(j1, terms, p),
        q2=tate_parameter(j2, terms, p),
        level1=int(sympy.prod(bad1)),
        level2=int(sympy.prod(bad2)),
        common_prime=p,
    )
