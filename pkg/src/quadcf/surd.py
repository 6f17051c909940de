"""Quadratic surds in an exact normal form and their periodic continued
fractions.

A Surd holds (P + sqrt(D)) / Q with integer P, Q, D subject to
    D > 0 and not a perfect square,  Q != 0,  Q divides D - P*P.
The divisibility makes the classical continued-fraction state recursion
integral forever, so expansions need no rational fallback and no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .arith import InvariantError, is_square, isqrt


@dataclass(frozen=True)
class Surd:
    P: int
    Q: int
    D: int

    def __post_init__(self):
        if self.D <= 0 or is_square(self.D):
            raise ValueError(f"D must be positive and nonsquare, got {self.D}")
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError(f"Q={self.Q} does not divide D-P^2={self.D - self.P**2}")

    def conjugate(self) -> "Surd":
        """(P - sqrt(D))/Q, rewritten to keep +sqrt(D) in the numerator."""
        return Surd(-self.P, -self.Q, self.D)

    def value_key(self) -> tuple[int, int, int, int]:
        """Canonical label (m, p, r, q) of the real number (p + r*sqrt(m))/q
        with m squarefree-radicand part of D, q > 0, gcd(p, r, q) = 1.
        Two surds denote the same real number iff their keys match."""
        from .arith import factorize  # local: avoids import at hot paths
        m, k = factorize(self.D).squarefree_kernel()
        p, r, q = self.P, k, self.Q
        if q < 0:
            p, r, q = -p, -r, -q
        g = math.gcd(math.gcd(p, r), q)
        return (m, p // g, r // g, q // g)

    def __float__(self) -> float:
        return float(eval_approx(self, 64))

    def __repr__(self) -> str:
        return f"Surd(({self.P}+sqrt({self.D}))/{self.Q})"


def make_surd(p: int, r: int, d: int, q: int) -> Surd:
    """Canonical surd for the number (p + r*sqrt(d))/q.

    Folds r into the radicand (D = r*r*d) and, when q does not divide
    D - P*P, rescales (P, Q, D) -> (P|Q|, Q|Q|, D*Q*Q), which preserves the
    value while restoring the divisibility invariant.
    """
    if r == 0:
        raise ValueError("r = 0 gives a rational, not a quadratic surd")
    if q == 0:
        raise ValueError("q must be nonzero")
    if d <= 0 or is_square(d):
        raise ValueError(f"radicand must be positive and nonsquare, got {d}")
    if r < 0:
        p, r, q = -p, -r, -q
    P, Q, D = p, q, r * r * d
    if (D - P * P) % Q != 0:
        a = abs(Q)
        P, D, Q = P * a, D * a * a, Q * a
    return Surd(P, Q, D)


def scale(x: Surd, num: int, den: int = 1) -> Surd:
    """The surd (num/den) * x."""
    if num == 0:
        raise ValueError("scaling by zero gives a rational")
    if den <= 0:
        raise ValueError("den must be positive")
    return make_surd(num * x.P, num, x.D, den * x.Q)


def mobius(x: Surd, a: int, b: int, c: int) -> Surd:
    """The surd (a*x + b) / c."""
    if a == 0:
        raise ValueError("a = 0 gives a rational")
    if c == 0:
        raise ValueError("c must be nonzero")
    return make_surd(a * x.P + b * x.Q, a, x.D, c * x.Q)


def floor_of(x: Surd) -> int:
    """Exact floor, via isqrt only.

    sqrt(D) is irrational, so for Q > 0 the floor equals (P + s) // Q with
    s = isqrt(D); for Q < 0 the numerator -P - sqrt(D) floors against s+1.
    """
    s = isqrt(x.D)
    if x.Q > 0:
        return (x.P + s) // x.Q
    return (-x.P - s - 1) // (-x.Q)


def compare_to_fraction(x: Surd, fr: Fraction) -> int:
    """Sign of x - fr (never 0: x is irrational). Exact."""
    a, b = fr.numerator, fr.denominator
    # x - a/b = (b*P - a*Q + b*sqrt(D)) / (b*Q), b > 0
    u = b * x.P - a * x.Q
    s = isqrt(b * b * x.D)  # floor(b*sqrt(D))
    num_positive = -u <= s  # b*sqrt(D) > -u
    return (1 if num_positive else -1) * (1 if x.Q > 0 else -1)


def is_reduced(x: Surd) -> bool:
    """Purely periodic criterion: x > 1 and conjugate strictly in (-1, 0)."""
    one, zero, minus_one = Fraction(1), Fraction(0), Fraction(-1)
    if compare_to_fraction(x, one) < 0:
        return False
    xb = x.conjugate()
    return compare_to_fraction(xb, minus_one) > 0 and compare_to_fraction(xb, zero) < 0


def eval_approx(x: Surd, bits: int = 53) -> Fraction:
    """Rational approximation with relative error below 2**-bits."""
    if bits < 1:
        raise ValueError("bits must be positive")
    shift = bits + 8
    while True:
        r = isqrt(x.D << (2 * shift))
        num = (x.P << shift) + r
        # relative error is at most 1/|num|; demand it under 2**-bits
        if abs(num) > (1 << bits):
            return Fraction(num, x.Q << shift)
        shift *= 2


@dataclass(frozen=True)
class CFExpansion:
    """Continued-fraction digits: finite preperiod, then period repeating
    forever. The period is nonempty and of least length. Every digit after
    the first is >= 1; the first may be <= 0 for small or negative surds."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        tail_ok = all(a >= 1 for a in self.preperiod[1:]) and all(
            a >= 1 for a in self.period
        )
        if not tail_ok:
            raise ValueError("digits after the first must be >= 1")

    def digits(self, n: int) -> list[int]:
        """First n digits of the full (eventually periodic) digit stream."""
        out = list(self.preperiod[:n])
        i = 0
        while len(out) < n:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    @property
    def period_length(self) -> int:
        return len(self.period)


def _state_walk(x: Surd) -> tuple[list[int], int]:
    """Run the state recursion until the first repeated (P, Q) state.
    Returns (digits, index where the cycle starts)."""
    P, Q, D = x.P, x.Q, x.D
    s = isqrt(D)
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(digits)
        a = (P + s) // Q if Q > 0 else (-P - s - 1) // (-Q)
        digits.append(a)
        P = a * Q - P
        Q2, rem = divmod(D - P * P, Q)
        if rem:
            raise InvariantError("state recursion left the integral lattice")
        Q = Q2
    return digits, seen[(P, Q)]


def cf_expand(x: Surd) -> CFExpansion:
    """Expansion by the exact state recursion.

    a = floor((P + sqrt(D))/Q), then P' = a*Q - P and Q' = (D - P'^2)/Q;
    the divisibility invariant keeps Q' integral. States (P, Q) are hashed
    and the first repeat cuts the digit list into preperiod + least period.
    """
    digits, i = _state_walk(x)
    return CFExpansion(tuple(digits[:i]), tuple(digits[i:]))


def periodic_tail(x: Surd) -> Surd:
    """The purely periodic complete quotient where x's expansion cycles,
    i.e. the surd whose expansion is exactly the repeating period."""
    _, i = _state_walk(x)
    P, Q, D = x.P, x.Q, x.D
    s = isqrt(D)
    for _ in range(i):
        a = (P + s) // Q if Q > 0 else (-P - s - 1) // (-Q)
        P = a * Q - P
        Q = (D - P * P) // Q
    return Surd(P, Q, D)


def convergents(digits: Iterable[int]) -> Iterator[tuple[int, int]]:
    """Yield (p, q) of [a0; a1, ..., ak] for each prefix of the digits."""
    pm1, qm1 = 1, 0
    pm2, qm2 = 0, 1
    for a in digits:
        p = a * pm1 + pm2
        q = a * qm1 + qm2
        yield p, q
        pm2, qm2 = pm1, qm1
        pm1, qm1 = p, q
