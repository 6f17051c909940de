"""Digit-pattern statistics of periodic continued fractions against the
Gauss measure.

The reference constant for a pattern w is the Gauss measure of the set of
x in [0,1] whose first digits are exactly w. That set is an interval with
continuant endpoints, so the constant is log2 of an explicit rational and
we keep the rational exactly; only the final comparison goes through
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .surd import CFExpansion, Surd, cf_expand


@dataclass(frozen=True)
class Pattern:
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("pattern must be nonempty")
        if any(a < 1 for a in self.digits):
            raise ValueError("pattern digits must be >= 1")

    def __len__(self):
        return len(self.digits)

    def label(self) -> str:
        return "-".join(str(a) for a in self.digits)


def _as_digits(w) -> tuple[int, ...]:
    if isinstance(w, Pattern):
        return w.digits
    return Pattern(tuple(w)).digits


@dataclass(frozen=True)
class Cylinder:
    """Interval of x in [0,1] opening with the given digits."""

    low: Fraction
    high: Fraction

    def __post_init__(self):
        if not (0 <= self.low < self.high <= 1):
            raise ValueError("cylinder endpoints out of order")


def cylinder(w) -> Cylinder:
    """Endpoints are the last convergent p_k/q_k of [0; w] and the mediant
    (p_k + p_{k-1})/(q_k + q_{k-1}), sorted."""
    digits = _as_digits(w)
    pm1, qm1 = 0, 1  # convergents of [0; w1, w2, ...]
    pm2, qm2 = 1, 0
    for a in digits:
        pm1, pm2 = a * pm1 + pm2, pm1
        qm1, qm2 = a * qm1 + qm2, qm1
    end = Fraction(pm1, qm1)
    mediant = Fraction(pm1 + pm2, qm1 + qm2)
    return Cylinder(min(end, mediant), max(end, mediant))


@dataclass(frozen=True)
class GaussMeasure:
    """Exact value log2(ratio), ratio a rational in (1, 2]."""

    ratio: Fraction

    @property
    def num(self) -> int:
        return self.ratio.numerator

    @property
    def den(self) -> int:
        return self.ratio.denominator

    def as_float(self) -> float:
        # big-int logs: exact to ~1 ulp even when continuants are huge
        return (math.log2(self.ratio.numerator) - math.log2(self.ratio.denominator))


def c_w(w) -> GaussMeasure:
    """Gauss measure of cylinder(w): log2((1 + high) / (1 + low))."""
    cyl = cylinder(w)
    return GaussMeasure((1 + cyl.high) / (1 + cyl.low))


def pattern_frequency(e: CFExpansion, w) -> Fraction:
    """Relative frequency of w as a cyclic factor of the period.

    The period is read as a cycle: one window starts at each of its L
    positions and wraps around, so patterns longer than the period are
    legal and the count is over exactly L windows. The preperiod never
    enters. The result is an exact rational in lowest terms and equals the
    limiting frequency of w along the infinite digit tail.
    """
    digits = _as_digits(w)
    period = e.period
    L = len(period)
    k = len(digits)
    count = sum(
        1
        for i in range(L)
        if all(period[(i + j) % L] == digits[j] for j in range(k))
    )
    return Fraction(count, L)


def deviation(x: Surd, w) -> float:
    """|pattern_frequency - c_w| as a float.

    Both inputs to the subtraction are correctly rounded (exact rational
    to float, and log2 of big ints), so the result is within 2**-50 of the
    true deviation.
    """
    freq = pattern_frequency(cf_expand(x), w)
    return abs(freq.numerator / freq.denominator - c_w(w).as_float())
