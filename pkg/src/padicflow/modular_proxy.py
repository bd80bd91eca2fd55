"""Newform-side state representation: coefficient vectors and a declared
weighted-l2 stand-in for the Petersson metric.

A semi-stable curve maps to the truncated Fourier coefficients of its
attached weight-2 newform, which by modularity equal the L-series
coefficients.  The linear family (1-t) f1 + t f2 produces formal vectors
that are generally not Hecke eigenforms; they are treated as plain
coefficient lists.  The metric is sqrt(sum w_n (a(n)-b(n))^2) with
w_n = n^-2: since a(n) = O(n), the profile is summable.  This is a proxy
declared in place of the Petersson integral, not a claim about it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCombination, NotSemistable
from . import elliptic_arith


@dataclass(frozen=True)
class CoefficientVector:
    """Truncated coefficients a(1..n_max) with the attached level."""

    level: int
    coeffs: tuple
    n_max: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.n_max:
            raise ValueError("coefficient count must equal n_max")

    def a(self, n: int) -> Fraction:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"index {n} outside 1..{self.n_max}")
        return self.coeffs[n - 1]

    def is_normalized(self) -> bool:
        return self.a(1) == 1

    def to_dict(self) -> dict:
        return {"level": self.level, "n_max": self.n_max,
                "coeffs": [str(c) if c.denominator != 1 else c.numerator
                           for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "CoefficientVector":
        coeffs = tuple(Fraction(str(c)) for c in data["coeffs"])
        return cls(level=int(data["level"]), coeffs=coeffs,
                   n_max=data.get("n_max", len(coeffs)))


@dataclass(frozen=True)
class MetricConfig:
    """Weight profile w_n = n^-2 truncated at n_max."""

    n_max: int

    def weight(self, n: int) -> Fraction:
        return Fraction(1, n * n)


def newform_vector(E, n_max: int) -> CoefficientVector:
    """Coefficient vector of the newform attached to a semi-stable curve.

    The level is the conductor, i.e. the product of the multiplicative
    primes.  NotSemistable if any prime is additive.
    """
    bad = elliptic_arith.semistable_bad_primes(E)
    vec = elliptic_arith.l_coefficients(E, n_max)
    level = 1
    for p in bad:
        level *= p
    if level != vec.level:
        raise NotSemistable(
            f"conductor {vec.level} is not squarefree for {E}")
    return vec


def combine(f1: CoefficientVector, f2: CoefficientVector, t,
            normalize: bool = True) -> CoefficientVector:
    """Coefficientwise (1-t) f1 + t f2, rescaled so a(1) = 1.

    The rescale is the denominator clearance; with normalized inputs the
    combined a(1) is already 1 and the scale is trivial.  ``normalize=False``
    keeps the raw linear combination (used by the monotonicity checks).
    """
    if f1.n_max != f2.n_max:
        raise ValueError("coefficient vectors must share n_max")
    t = Fraction(t)
    raw = tuple((1 - t) * x + t * y for x, y in zip(f1.coeffs, f2.coeffs))
    level = f1.level if t < Fraction(1, 2) else f2.level
    if not normalize:
        return CoefficientVector(level=level, coeffs=raw, n_max=f1.n_max)
    lead = raw[0]
    if lead == 0:
        raise DegenerateCombination("combined a(1) vanished")
    scaled = tuple(c / lead for c in raw)
    return CoefficientVector(level=level, coeffs=scaled, n_max=f1.n_max)


def distance(f: CoefficientVector, g: CoefficientVector,
             cfg: MetricConfig) -> float:
    """Weighted l2 distance over coefficients up to cfg.n_max."""
    if f.n_max != g.n_max:
        raise ValueError("coefficient vectors must share n_max")
    n_top = min(cfg.n_max, f.n_max)
    acc = Fraction(0)
    for n in range(1, n_top + 1):
        diff = f.a(n) - g.a(n)
        acc += cfg.weight(n) * diff * diff
    return math.sqrt(acc)
