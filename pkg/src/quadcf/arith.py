"""Integer groundwork: primality, factorization, Kronecker symbol.

Everything here is exact; no floats. Numbers are plain Python ints and may
be arbitrarily large.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


class InvariantError(RuntimeError):
    """An internal consistency check failed (library bug, not bad input)."""


def isqrt(n: int) -> int:
    """Floor of the square root: r with r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise ValueError("isqrt of negative number")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


# Deterministic Miller-Rabin witnesses: these twelve bases decide primality
# correctly for every n < 3.3 * 10**24 (covers all of 2**64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DET_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _mr_witness(n: int, a: int) -> bool:
    """True if a witnesses compositeness of odd n > 2."""
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic for n below 3.3e24 (so for everything under 2**64).
    Above that, 64 Miller-Rabin rounds with bases derived from a seeded
    generator; error probability below 4**-64 = 2**-128.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _MR_DET_LIMIT:
        return not any(_mr_witness(n, a) for a in _MR_BASES if a % n)
    rng = random.Random(n)
    for _ in range(64):
        if _mr_witness(n, rng.randrange(2, n - 1)):
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Brent's cycle variant of Pollard rho; returns a nontrivial factor
    of composite n with no prime factor below the trial bound."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # batch overshot; retry from ys one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # unlucky cycle, pick new parameters


_TRIAL_BOUND = 10_000


@dataclass(frozen=True)
class Factorization:
    """n = product of p**e over factors, p ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors of n, ascending."""
        divs = [1]
        for p, e in self.factors:
            pk = 1
            block = []
            for _ in range(e):
                pk *= p
                block.extend(d * pk for d in divs)
            divs.extend(block)
        return sorted(divs)

    def squarefree_kernel(self) -> tuple[int, int]:
        """(s, k) with n = k*k*s and s squarefree."""
        s = k = 1
        for p, e in self.factors:
            if e % 2:
                s *= p
            k *= p ** (e // 2)
        return s, k


def factorize(n: int) -> Factorization:
    """Full factorization: trial division to 10**4, then Pollard rho (Brent)
    on whatever is left, recursing until all cofactors are proven prime."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    m = n
    counts: dict[int, int] = {}
    d = 2
    while d <= _TRIAL_BOUND and d * d <= m:
        while m % d == 0:
            counts[d] = counts.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        if is_square(m):
            r = math.isqrt(m)
            stack.extend((r, r))
            continue
        g = _pollard_brent(m, random.Random(m))
        stack.extend((g, m // g))
    fac = Factorization(n, tuple(sorted(counts.items())))
    check = 1
    for p, e in fac.factors:
        check *= p ** e
    if check != n:
        raise InvariantError(f"factorization of {n} does not multiply back")
    return fac


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for n >= 1.

    Completely multiplicative in n; extends the Jacobi symbol with
    (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8.
    """
    if n < 1:
        raise ValueError("kronecker expects n >= 1")
    result = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
