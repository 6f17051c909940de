"""Independent oracles shared by the test modules.

Everything here is deliberately naive: trial division, brute-force
searches, Fraction arithmetic at explicit precision. The point is that
none of it shares code with the package under test.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from quadcf.surd import Surd, make_surd


def frac_sqrt(d: int, bits: int = 160) -> Fraction:
    """Fraction below sqrt(d), within 2**-bits of it."""
    return Fraction(math.isqrt(d << (2 * bits)), 1 << bits)


def surd_fraction(x: Surd, bits: int = 160) -> Fraction:
    return (x.P + frac_sqrt(x.D, bits)) / x.Q


def cf_digits_of_fraction(fr: Fraction, count: int) -> list[int]:
    digits = []
    for _ in range(count):
        a = fr.numerator // fr.denominator
        digits.append(a)
        fr = fr - a
        if fr == 0:
            break
        fr = 1 / fr
    return digits


def sieve_primes(bound: int) -> list[int]:
    flags = bytearray([1]) * (bound + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return [i for i in range(2, bound + 1) if flags[i]]


def trial_factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_pisano(n: int) -> int:
    a, b, k = 0, 1, 0
    while True:
        a, b = b, (a + b) % n
        k += 1
        if (a, b) == (0, 1):
            return k


def brute_mat_order(m: tuple[int, int, int, int], n: int, cap: int = 10**7) -> int:
    a, b, c, d = (v % n for v in m)
    x = (a, b, c, d)
    k = 1
    while x != (1 % n, 0, 0, 1 % n):
        x = (
            (x[0] * a + x[1] * c) % n,
            (x[0] * b + x[1] * d) % n,
            (x[2] * a + x[3] * c) % n,
            (x[2] * b + x[3] * d) % n,
        )
        k += 1
        if k > cap:
            raise RuntimeError("brute order runaway")
    return k


def brute_pell(m: int) -> tuple[int, int, int]:
    """Smallest unit > 1 of the maximal order of Q(sqrt(m)), m squarefree,
    as coordinates (a, b) in the basis (1, xD) plus its norm.

    For m = 1 mod 4 search (t + u*sqrt(m))/2 with t = u mod 2 and
    t^2 - m u^2 = +-4; otherwise t + u*sqrt(m) with t^2 - m u^2 = +-1.
    """
    if m % 4 == 1:
        u = 1
        while True:
            mu2 = m * u * u
            for target in (-4, 4):
                t2 = mu2 + target
                if t2 > 0:
                    t = math.isqrt(t2)
                    if t * t == t2 and (t - u) % 2 == 0:
                        return ((t - u) // 2, u, target // 4)
            u += 1
    u = 1
    while True:
        mu2 = m * u * u
        for target in (-1, 1):
            t2 = mu2 + target
            if t2 > 0:
                t = math.isqrt(t2)
                if t * t == t2:
                    return (t, u, target)
        u += 1


def random_surd(rng: random.Random, ms=(2, 3, 5, 13), span: int = 40) -> Surd:
    m = rng.choice(ms)
    p = rng.randint(-span, span)
    r = rng.choice([i for i in range(-12, 13) if i])
    q = rng.choice([i for i in range(-10, 11) if i])
    return make_surd(p, r, m, q)


def dirichlet_class_number(disc: int, reg: float) -> int:
    """Wide class number of a fundamental discriminant from the finite
    character sum for L(1, chi): h = sqrt(disc) * L / (2 * reg)."""
    total = 0.0
    for a in range(1, disc):
        chi = jacobi(disc, a)
        if chi:
            total -= chi * math.log(math.sin(math.pi * a / disc))
    L = total / math.sqrt(disc)
    h = L * math.sqrt(disc) / (2 * reg)
    assert abs(h - round(h)) < 1e-6, (disc, h)
    return round(h)


def jacobi(a: int, n: int) -> int:
    """Kronecker symbol for n >= 1, written from the reciprocity laws."""
    if n < 1:
        raise ValueError("need n >= 1")
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        two = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        return (two**e) * _jacobi_odd(a, n)
    return _jacobi_odd(a, n)


def _jacobi_odd(a: int, n: int) -> int:
    assert n > 0 and n % 2 == 1
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
