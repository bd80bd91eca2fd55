"""Truncated power series x^3 (1 + sum A_j x^j) as p-adic dynamical systems.

Coefficients are exact integers (or rationals with denominator coprime to p,
as produced by the formal expansion of a rational curve) interpreted in Z_p.
Evaluation is restricted to the maximal ideal v(x) >= 1, where the unit
factor has valuation 0 and the cubing law v(u(x)) = 3 v(x) is exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import OutOfDomain
from .padic_core import PadicNumber, vp_int

_TERM_RE = re.compile(
    r"""^\s*([+-])?\s*(\d+)?\s*\*?\s*   # optional sign and coefficient
        (x(?:\^(\d+))?)?\s*$            # optional power of x
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """The series x^3 (1 + A_1 x + ... + A_J x^J), truncated at order J.

    ``prime`` may be None for a series not yet bound to a p-adic carrier
    (the formal expansion of a curve is prime-agnostic).
    """

    coefficients: tuple
    prime: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients",
            tuple(Fraction(c) for c in self.coefficients))
        if self.prime is not None and self.prime < 2:
            raise ValueError("prime must be >= 2")

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients)

    def coefficient(self, j: int) -> Fraction:
        """A_j for 1 <= j <= J (A_0 of the unit factor is 1)."""
        if j == 0:
            return Fraction(1)
        if not 1 <= j <= self.truncation_order:
            raise IndexError(f"coefficient index {j} out of range")
        return self.coefficients[j - 1]

    def with_prime(self, prime: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, prime)

    # -- parsing / formatting ------------------------------------------------

    @classmethod
    def from_literal(cls, text: str, prime: int | None = None) -> "TruncatedSeries":
        """Parse the literal form "x^3*(1 + A1*x + A2*x^2 + ...)".

        Coefficients are integers; terms may appear in any order and
        missing powers default to 0.
        """
        s = text.replace(" ", "")
        m = re.match(r"^x\^3\*\((.*)\)$", s)
        if m is None:
            raise ValueError(f"series literal must look like x^3*(...): {text!r}")
        body = m.group(1)
        # split into signed terms
        parts = re.findall(r"[+-]?[^+-]+", body)
        coeffs: dict[int, int] = {}
        const_seen = False
        for part in parts:
            tm = _TERM_RE.match(part)
            if tm is None or (tm.group(2) is None and tm.group(3) is None):
                raise ValueError(f"cannot parse series term {part!r}")
            sign = -1 if tm.group(1) == "-" else 1
            coeff = sign * (int(tm.group(2)) if tm.group(2) is not None else 1)
            if tm.group(3) is None:
                power = 0
            elif tm.group(4) is None:
                power = 1
            else:
                power = int(tm.group(4))
            if power == 0:
                if coeff != 1:
                    raise ValueError("unit factor must have constant term 1")
                const_seen = True
            else:
                coeffs[power] = coeffs.get(power, 0) + coeff
        if not const_seen:
            raise ValueError("unit factor must have constant term 1")
        order = max(coeffs) if coeffs else 0
        return cls(tuple(coeffs.get(j, 0) for j in range(1, order + 1)), prime)

    def to_literal(self) -> str:
        terms = ["1"]
        for j, a in enumerate(self.coefficients, start=1):
            if a == 0:
                continue
            xpow = "x" if j == 1 else f"x^{j}"
            terms.append(f"{a}*{xpow}")
        return f"x^3*({' + '.join(terms)})"

    def to_dict(self) -> dict:
        return {"prime": self.prime,
                "coefficients": [str(c) if c.denominator != 1 else c.numerator
                                 for c in self.coefficients]}

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        return cls(tuple(Fraction(str(c)) for c in data["coefficients"]),
                   data.get("prime"))


@dataclass(frozen=True)
class OrbitRecord:
    """Forward orbit of a seed with the valuation of every iterate."""

    seed: PadicNumber
    iterates: tuple = field(default_factory=tuple)

    @property
    def valuations(self) -> tuple:
        return tuple(x.valuation for x in self.iterates)


def _coefficient_padic(a: Fraction, prime: int, precision: int) -> PadicNumber:
    if a.denominator % prime == 0:
        raise OutOfDomain(
            f"coefficient {a} is not a p-adic integer for p={prime}")
    return PadicNumber.from_fraction(a, prime, precision)


def evaluate(u: TruncatedSeries, x: PadicNumber) -> PadicNumber:
    """Evaluate the truncated series at x with v(x) >= 1.

    The unit factor 1 + sum A_j x^j has valuation 0, so the result has
    valuation exactly 3 v(x).
    """
    if u.prime is not None and u.prime != x.prime:
        raise ValueError(f"series bound to p={u.prime}, got x with p={x.prime}")
    if x.is_zero():
        return x  # fixed point
    if x.valuation <= 0:
        raise OutOfDomain(f"v(x) = {x.valuation} <= 0 is outside the domain")
    prime, precision = x.prime, x.precision
    one = PadicNumber.from_int(1, prime, precision)
    # Horner on the unit factor: 1 + x(A_1 + x(A_2 + ...))
    acc = PadicNumber.zero(prime, precision)
    for a in reversed(u.coefficients):
        acc = acc * x + _coefficient_padic(Fraction(a), prime, precision)
    unit_factor = one + acc * x
    return x * x * x * unit_factor


def iterate(u: TruncatedSeries, seed: PadicNumber, steps: int) -> OrbitRecord:
    """Forward orbit seed, u(seed), u(u(seed)), ... for ``steps`` steps."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    iterates = [seed]
    current = seed
    for _ in range(steps):
        current = evaluate(u, current)
        iterates.append(current)
    return OrbitRecord(seed, tuple(iterates))


def vn_membership(u: TruncatedSeries, x: PadicNumber, n: int) -> bool:
    """True iff x lies in V_n = u^{-1}(p^n Z_p \\ p^{n+1} Z_p).

    Equivalent to v(u(x)) = n, i.e. 3 v(x) = n; over Q_p the set V_n meets
    the domain only when 3 divides n, which this predicate surfaces rather
    than patches.
    """
    value = evaluate(u, x)
    if value.is_zero():
        return False
    return value.valuation == n
