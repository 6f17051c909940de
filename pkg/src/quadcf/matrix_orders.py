"""Multiplicative orders of 2x2 integer matrices mod N and of ring
elements in O/NO.

The order mod N is assembled by CRT from prime powers. At an odd prime
the characteristic polynomial's splitting gives a candidate exponent
(p-1 split, p+1 or 2(p+1) inert depending on det, p(p-1) for a double
root), the true order is extracted by stripping prime factors, and going
from p^k to p^(k+1) multiplies the order by p or leaves it alone. p = 2
is searched directly up to mod 8, then lifted the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import InvariantError, factorize, is_prime, kronecker
from .quad_orders import AlgInt, FieldData, Mat2, alg_norm, phi

SPLIT = "split"
INERT = "inert"
RAMIFIED = "ramified"
COMPOSITE = "composite"


def _mat_mul_mod(A: Mat2, B: Mat2, n: int) -> Mat2:
    return Mat2(
        (A.a * B.a + A.b * B.c) % n,
        (A.a * B.b + A.b * B.d) % n,
        (A.c * B.a + A.d * B.c) % n,
        (A.c * B.b + A.d * B.d) % n,
    )


def _mat_pow_mod(M: Mat2, k: int, n: int) -> Mat2:
    R = Mat2(1 % n, 0, 0, 1 % n)
    M = M.mod(n)
    while k:
        if k & 1:
            R = _mat_mul_mod(R, M, n)
        M = _mat_mul_mod(M, M, n)
        k >>= 1
    return R


def _is_identity(M: Mat2, n: int) -> bool:
    return M == Mat2(1 % n, 0, 0, 1 % n)


def _order_from_bound(M: Mat2, n: int, bound: int) -> int:
    """Exact order given a multiple `bound` of it: strip prime factors."""
    if not _is_identity(_mat_pow_mod(M, bound, n), n):
        raise InvariantError(f"candidate exponent {bound} is not annihilating mod {n}")
    o = bound
    for q in factorize(bound).primes:
        while o % q == 0 and _is_identity(_mat_pow_mod(M, o // q, n), n):
            o //= q
    return o


def _order_mod_odd_prime(M: Mat2, p: int) -> int:
    t = M.trace % p
    d = M.det % p
    delta = (t * t - 4 * d) % p
    if delta == 0:
        bound = p * (p - 1)  # double eigenvalue: scalar times unipotent
    elif kronecker(delta, p) == 1:
        bound = p - 1  # eigenvalues in F_p
    elif d % p == 1:
        bound = p + 1  # inert, det 1: lambda^(p+1) = 1
    elif d % p == p - 1:
        bound = 2 * (p + 1)  # inert, det -1: lambda^(p+1) = -1
    else:
        bound = p * p - 1  # inert, general det
    return _order_from_bound(M, p, bound)


def _order_by_search(M: Mat2, n: int, cap: int) -> int:
    P = M.mod(n)
    for k in range(1, cap + 1):
        if _is_identity(P, n):
            return k
        P = _mat_mul_mod(P, M, n)
    raise InvariantError(f"no order found mod {n} within {cap} steps")


def _order_mod_prime_power(M: Mat2, p: int, e: int) -> int:
    if p == 2:
        k0 = min(e, 3)
        o = _order_by_search(M, 2**k0, 2048)
        start = k0 + 1
    else:
        o = _order_mod_odd_prime(M, p)
        start = 2
    for k in range(start, e + 1):
        if not _is_identity(_mat_pow_mod(M, o, p**k), p**k):
            o *= p
    return o


def mat_order_mod(M: Mat2, N: int) -> int:
    """Multiplicative order of M modulo N; requires gcd(det M, N) = 1.

    The result o is verified in place: M^o = I mod N and M^(o/q) != I for
    every prime q dividing o.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if math.gcd(M.det, N) != 1:
        raise ValueError("matrix is not invertible mod N")
    if N == 1:
        return 1
    o = 1
    for p, e in factorize(N):
        o = math.lcm(o, _order_mod_prime_power(M, p, e))
    # witness property
    if not _is_identity(_mat_pow_mod(M, o, N), N):
        raise InvariantError("claimed order does not annihilate")
    for q in factorize(o).primes:
        if _is_identity(_mat_pow_mod(M, o // q, N), N):
            raise InvariantError("claimed order is not minimal")
    return o


def ring_order_mod(f: FieldData, alpha: AlgInt, N: int) -> int:
    """Order of alpha in (O/NO)^x by repeated multiplication with
    coordinates reduced mod N each step. Needs gcd(norm(alpha), N) = 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if math.gcd(alg_norm(f, alpha), N) != 1:
        raise ValueError("element is not invertible mod N")
    if N == 1:
        return 1
    a0, b0 = alpha.a % N, alpha.b % N
    a, b = a0, b0
    t, nrm = f.t % N, f.nrm % N
    for k in range(1, 4 * N * N + 2):
        if a == 1 and b == 0:
            return k
        bb = b * b0 % N
        a, b = (a * a0 - bb * nrm) % N, (a * b0 + b * a0 + bb * t) % N
    raise InvariantError("order search exceeded the group size")


def max_element_order(f: FieldData, p: int) -> int:
    """Largest order the fundamental unit can have mod an odd unramified
    prime: p-1 split; inert, p+1 for norm +1 and 2(p+1) for norm -1."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    k = kronecker(f.D, p)
    if k == 0:
        raise ValueError(f"{p} is ramified")
    if k == 1:
        return p - 1
    return p + 1 if f.unit_norm == 1 else 2 * (p + 1)


@dataclass(frozen=True)
class OrderRecord:
    N: int
    ord: int
    exponent: float  # ln(ord)/ln(N)
    split_type: str
    is_max: bool | None  # odd unramified primes only, else None

    def __post_init__(self):
        if self.ord < 1:
            raise ValueError("order must be positive")


def _record_for(f: FieldData, M: Mat2, N: int) -> OrderRecord:
    o = mat_order_mod(M, N)
    exponent = math.log(o) / math.log(N)
    if is_prime(N):
        k = kronecker(f.D, N)
        split_type = SPLIT if k == 1 else INERT if k == -1 else RAMIFIED
        is_max = None
        if N != 2 and k != 0:
            is_max = o == max_element_order(f, N)
    else:
        split_type, is_max = COMPOSITE, None
    return OrderRecord(N, o, exponent, split_type, is_max)


def scan_orders(f: FieldData, bound: int, kind: str = "integers") -> list[OrderRecord]:
    """Orders of phi(epsD) mod N for N = 2..bound, or mod the primes up to
    bound. Deterministic, ascending in N."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if kind not in ("integers", "primes"):
        raise ValueError(f"unknown kind {kind!r}")
    M = phi(f, f.epsD)
    ns = range(2, bound + 1) if kind == "integers" else _primes_up_to(bound)
    return [_record_for(f, M, N) for N in ns]


def _primes_up_to(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(2, bound + 1) if sieve[i]]
