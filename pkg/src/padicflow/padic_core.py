"""Exact p-adic arithmetic at a fixed working precision.

A number is stored as its prime, its valuation and a unit part kept to N
base-p digits (lowest digit first, lowest digit nonzero).  The zero element
carries no finite valuation and is flagged by ``valuation=None``.  All values
are immutable; every operation is pure, so batches can run in parallel.

Radii of balls are integer powers of p, matching the value group of the
valuation on Q_p.  Real-valued radii only appear in tfilter_geometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonUnitInverse, PrecisionExhausted, ZeroArgument

DEFAULT_PRECISION = 24


def vp_int(n: int, p: int) -> int:
    """Exponent of p dividing a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined for integers")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_fraction(x: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined for rationals")
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


@dataclass(frozen=True)
class PadicNumber:
    """Element of Q_p kept to ``precision`` base-p digits of its unit part.

    ``valuation is None`` flags the zero element (its unit is 0).  For a
    nonzero element the unit is an integer in [1, p**precision) coprime
    to p, so the lowest stored digit is nonzero.
    """

    prime: int
    precision: int
    valuation: int | None
    unit: int

    def __post_init__(self):
        if self.prime < 2:
            raise ValueError(f"prime must be >= 2, got {self.prime}")
        if self.precision < 1:
            raise ValueError("precision must be positive")
        if self.valuation is None:
            if self.unit != 0:
                raise ValueError("zero element must have unit 0")
        else:
            if not 0 < self.unit < self.prime ** self.precision:
                raise ValueError("unit out of range for the precision")
            if self.unit % self.prime == 0:
                raise ValueError("unit part must be coprime to p")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicNumber":
        return cls(prime, precision, None, 0)

    @classmethod
    def from_int(cls, n: int, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicNumber":
        if n == 0:
            return cls.zero(prime, precision)
        v = vp_int(n, prime)
        unit = (n // prime ** v) % prime ** precision
        return cls(prime, precision, v, unit)

    @classmethod
    def from_fraction(cls, x, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicNumber":
        x = Fraction(x)
        if x == 0:
            return cls.zero(prime, precision)
        num, den = x.numerator, x.denominator
        vn = vp_int(num, prime)
        vd = vp_int(den, prime)
        modulus = prime ** precision
        unum = (num // prime ** vn) % modulus
        uden = (den // prime ** vd) % modulus
        unit = unum * pow(uden, -1, modulus) % modulus
        return cls(prime, precision, vn - vd, unit)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.valuation is None

    @property
    def unit_digits(self) -> tuple[int, ...]:
        """The N retained base-p digits of the unit part, lowest first."""
        digits = []
        u = self.unit
        for _ in range(self.precision):
            u, d = divmod(u, self.prime)
            digits.append(d)
        return tuple(digits)

    def digit(self, k: int) -> int:
        """Digit of the number itself at p^k (0 below the valuation)."""
        if self.is_zero():
            return 0
        shift = k - self.valuation
        if shift < 0:
            return 0
        if shift >= self.precision:
            raise PrecisionExhausted(f"digit p^{k} beyond retained precision")
        return (self.unit // self.prime ** shift) % self.prime

    def abs_log(self) -> Fraction:
        """|x|_p as an exact rational p**(-valuation); 0 for the zero flag."""
        if self.is_zero():
            return Fraction(0)
        return Fraction(1, self.prime) ** self.valuation

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "PadicNumber"):
        if not isinstance(other, PadicNumber):
            raise TypeError(f"expected PadicNumber, got {type(other).__name__}")
        if self.prime != other.prime or self.precision != other.precision:
            raise ValueError("operands need the same prime and precision")

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        self._check_compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        modulus = self.prime ** self.precision
        if self.valuation <= other.valuation:
            lo, hi = self, other
        else:
            lo, hi = other, self
        shift = hi.valuation - lo.valuation
        if shift >= self.precision:
            # the higher term is invisible at this precision
            return lo
        total = lo.unit + hi.unit * self.prime ** shift
        total %= modulus
        if total == 0:
            raise PrecisionExhausted(
                "cancellation consumed all retained digits")
        gain = vp_int(total, self.prime)
        unit = (total // self.prime ** gain) % modulus
        return PadicNumber(self.prime, self.precision, lo.valuation + gain, unit)

    def __neg__(self) -> "PadicNumber":
        if self.is_zero():
            return self
        modulus = self.prime ** self.precision
        return PadicNumber(self.prime, self.precision, self.valuation,
                           (-self.unit) % modulus)

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return self + (-other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return PadicNumber.zero(self.prime, self.precision)
        modulus = self.prime ** self.precision
        return PadicNumber(self.prime, self.precision,
                           self.valuation + other.valuation,
                           self.unit * other.unit % modulus)

    def invert(self) -> "PadicNumber":
        """Inverse of a unit; valuation must be exactly 0."""
        if self.is_zero() or self.valuation != 0:
            raise NonUnitInverse("invert requires valuation 0")
        modulus = self.prime ** self.precision
        return PadicNumber(self.prime, self.precision, 0,
                           pow(self.unit, -1, modulus))

    def __pow__(self, n: int) -> "PadicNumber":
        if n < 0:
            raise ValueError("negative powers not supported; use invert()")
        result = PadicNumber.from_int(1, self.prime, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        p = self.prime
        terms = []
        for k, d in enumerate(self.unit_digits):
            if d == 0:
                continue
            if k == 0:
                terms.append(str(d))
            elif k == 1:
                terms.append(f"{d}*{p}")
            else:
                terms.append(f"{d}*{p}^{k}")
        return f"{p}^{self.valuation} * ({' + '.join(terms)})"

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "valuation": self.valuation,
            "digits": list(self.unit_digits) if not self.is_zero() else [],
        }

    @classmethod
    def from_dict(cls, data: dict, precision: int | None = None) -> "PadicNumber":
        prime = data["prime"]
        if data.get("valuation") is None:
            return cls.zero(prime, precision or DEFAULT_PRECISION)
        digits = data["digits"]
        precision = precision or max(len(digits), 1)
        unit = sum(d * prime ** k for k, d in enumerate(digits[:precision]))
        return cls(prime, precision, data["valuation"], unit)


def arith(x: PadicNumber, y: PadicNumber, op: str) -> PadicNumber:
    """Dispatch add / sub / mul / invert-if-unit on a pair of numbers.

    ``invert-if-unit`` ignores y and inverts x.
    """
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "invert-if-unit":
        return x.invert()
    raise ValueError(f"unknown op {op!r}")


def same_side_of_zero(x: PadicNumber, y: PadicNumber) -> bool:
    """True iff x and y lie on the same side of zero.

    Two nonzero points share a side iff 0 is outside the smallest disc
    containing both, i.e. iff v(x - y) > v(x).  Elements equal to working
    precision are treated as equal, hence on the same side.
    """
    if x.is_zero() or y.is_zero():
        raise ZeroArgument("side of zero is defined for nonzero elements")
    if x.valuation != y.valuation:
        return False
    try:
        diff = x - y
    except PrecisionExhausted:
        return True
    return diff.valuation > x.valuation


@dataclass(frozen=True)
class PadicBall:
    """Ball of radius p**(-log_radius) around a center.

    Membership is valuation-decidable: with radii restricted to powers of
    p, the open ball of radius p^(-k) equals the closed ball of radius
    p^(-(k+1)).
    """

    center: PadicNumber
    log_radius: int
    closed: bool = True

    def contains(self, x: PadicNumber) -> bool:
        try:
            diff = x - self.center
        except PrecisionExhausted:
            return True  # indistinguishable from the center
        if diff.is_zero():
            return True
        threshold = self.log_radius if self.closed else self.log_radius + 1
        return diff.valuation >= threshold
