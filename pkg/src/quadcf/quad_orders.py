"""Real quadratic orders through a single canonical generator.

For a squarefree m > 1 the generator is xD = sqrt(m), or (1 + sqrt(m))/2
when m = 1 mod 4; either way Z[xD] is the maximal order, of discriminant
D = 4m resp. m. Elements are integer pairs (a, b) meaning a + b*xD, and
multiplication by an element is the 2x2 integer matrix phi(alpha) acting
on the basis {1, xD}. Suborders are Z[f*xD] for f >= 1.

Two different power indices of the fundamental unit appear mod N:

  unit_group_index(N): least k with phi(eps)^k scalar mod N. This equals
      the index (Z[xD]^x : Z[N*xD]^x) and drives regulators of suborders.
  R_of(N): least k with phi(eps)^k = +I or -I mod N. This can be twice
      the unit-group index: a scalar c*I with c*c = det mod N need not
      have c = +-1 (Fibonacci matrix mod 5 hits 3*I at k = 5).

Regulators use unit_group_index; R_of is kept as the coarser +-I variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import InvariantError, factorize, is_square
from .surd import Surd, cf_expand, eval_approx, make_surd, periodic_tail


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def mod(self, n: int) -> "Mat2":
        return Mat2(self.a % n, self.b % n, self.c % n, self.d % n)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def is_scalar_mod(self, n: int) -> bool:
        return (
            self.b % n == 0
            and self.c % n == 0
            and (self.a - self.d) % n == 0
        )

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(1, 0, 0, 1)


@dataclass(frozen=True)
class AlgInt:
    """a + b*xD with integer coordinates in the basis {1, xD}."""

    a: int
    b: int


@dataclass(frozen=True)
class FieldData:
    """The maximal order of Q(sqrt(m)) with its fundamental unit.

    t and nrm are trace and norm of xD, so xD*xD = t*xD - nrm. epsD is the
    smallest unit > 1 of Z[xD]; regD its natural log; unit_norm its norm.
    """

    m: int
    D: int
    xD: Surd
    t: int
    nrm: int
    epsD: AlgInt
    regD: float
    unit_norm: int


@dataclass(frozen=True)
class OrderSpec:
    """The suborder Z[f*xD] of conductor f inside field.D's maximal order."""

    field: FieldData
    f: int

    def __post_init__(self):
        if self.f < 1:
            raise ValueError("conductor must be >= 1")

    @property
    def disc(self) -> int:
        return self.f * self.f * self.field.D


def field_data(d: int) -> FieldData:
    """Accepts a squarefree m > 1 or a fundamental discriminant D > 0.

    Rejects perfect squares, m <= 1, and discriminants with a square
    factor that are not of the 4m shape.
    """
    if d <= 1:
        raise ValueError("need an integer > 1")
    if is_square(d):
        raise ValueError(f"{d} is a perfect square")
    fac = factorize(d)
    if d % 4 == 0:
        m = d // 4
        if m <= 1 or not factorize(m).is_squarefree() or m % 4 == 1:
            raise ValueError(f"{d} is not a fundamental discriminant")
    elif fac.is_squarefree():
        m = d
    else:
        raise ValueError(f"{d} is neither squarefree nor a fundamental discriminant")
    if m % 4 == 1:
        D = m
        xD = make_surd(1, 1, m, 2)
        t, nrm = 1, (1 - m) // 4
    else:
        D = 4 * m
        xD = make_surd(0, 1, m, 1)
        t, nrm = 0, -m
    eps = _unit_from_period(m, t, nrm, xD)
    norm = eps.a * eps.a + eps.a * eps.b * t + eps.b * eps.b * nrm
    if norm not in (1, -1):
        raise InvariantError("period unit is not a unit")
    reg = _log_value(xD, eps)
    return FieldData(m, D, xD, t, nrm, eps, reg, norm)


# ---- element arithmetic ----

def alg_mul(f: FieldData, u: AlgInt, v: AlgInt) -> AlgInt:
    # (a + b x)(c + d x) with x*x = t*x - nrm
    bd = u.b * v.b
    return AlgInt(u.a * v.a - bd * f.nrm, u.a * v.b + u.b * v.a + bd * f.t)


def alg_pow(f: FieldData, u: AlgInt, k: int) -> AlgInt:
    if k < 0:
        raise ValueError("negative powers not supported here")
    r = AlgInt(1, 0)
    while k:
        if k & 1:
            r = alg_mul(f, r, u)
        u = alg_mul(f, u, u)
        k >>= 1
    return r


def alg_norm(f: FieldData, u: AlgInt) -> int:
    return u.a * u.a + u.a * u.b * f.t + u.b * u.b * f.nrm


def alg_trace(f: FieldData, u: AlgInt) -> int:
    return 2 * u.a + u.b * f.t


def alg_conj(f: FieldData, u: AlgInt) -> AlgInt:
    return AlgInt(u.a + u.b * f.t, -u.b)


def alg_value(f: FieldData, u: AlgInt, bits: int = 96) -> Fraction:
    return u.a + u.b * eval_approx(f.xD, bits)


def alg_log(f: FieldData, u: AlgInt) -> float:
    """Natural log of the real value of u; u must be positive."""
    return _log_value(f.xD, u)


def _log_value(xD: Surd, u: AlgInt) -> float:
    fr = u.a + u.b * eval_approx(xD, 96)
    if fr <= 0:
        raise ValueError("log of a non-positive element")
    # log of big ints is fine; Fraction may carry thousands of digits
    return math.log(fr.numerator) - math.log(fr.denominator)


def phi(f: FieldData, alpha: AlgInt) -> Mat2:
    """Multiplication-by-alpha matrix on the basis {1, xD}: first row the
    coordinates of alpha*1, second row those of alpha*xD. Trace and det
    are the trace and norm of alpha."""
    return Mat2(alpha.a, alpha.b, -alpha.b * f.nrm, alpha.a + alpha.b * f.t)


def surd_coords(x: Surd) -> tuple[int, int, int, int]:
    """(m, u, v, w): x = (u + v*xD)/w with w > 0, gcd(u, v, w) = 1, v != 0.

    m is the squarefree part of the radicand and fixes which xD is meant.
    """
    m, r = factorize(x.D).squarefree_kernel()
    if m % 4 == 1:
        u, v, w = x.P - r, 2 * r, x.Q  # sqrt(m) = 2*xD - 1
    else:
        u, v, w = x.P, r, x.Q
    if w < 0:
        u, v, w = -u, -v, -w
    g = math.gcd(math.gcd(u, v), w)
    return m, u // g, v // g, w // g


def _unit_from_period(m: int, t: int, nrm: int, z: Surd) -> AlgInt:
    """Smallest unit > 1 of the stabilizer order of Z + Z*z, read off one
    least period of z's continued fraction.

    If M is the product of the digit matrices [[a,1],[1,0]] over one
    period of the purely periodic tail y, then y is fixed by M as a Mobius
    map and eps = M21*y + M22 is the fundamental automorph; its norm is
    det M = (-1)^period_length.
    """
    e = cf_expand(z)
    y = periodic_tail(z)
    m2, uy, vy, wy = surd_coords(y)
    if m2 != m:
        raise InvariantError("tail left the field")
    M = Mat2.identity()
    for a in e.period:
        M = M * Mat2(a, 1, 1, 0)
    a_num = M.c * uy + M.d * wy
    b_num = M.c * vy
    if a_num % wy or b_num % wy:
        raise InvariantError("automorph has non-integral coordinates")
    eps = AlgInt(a_num // wy, b_num // wy)
    norm = eps.a * eps.a + eps.a * eps.b * t + eps.b * eps.b * nrm
    if norm != (-1) ** len(e.period):
        raise InvariantError("automorph norm disagrees with period parity")
    return eps


def unit_from_period(f: FieldData, z: Surd) -> AlgInt:
    """Fundamental unit of the order attached to the lattice Z + Z*z,
    computed from z's continued-fraction period. z must lie in f's field."""
    m2 = surd_coords(z)[0]
    if m2 != f.m:
        raise ValueError("surd lies in a different field")
    return _unit_from_period(f.m, f.t, f.nrm, z)


# ---- suborders ----

def disc_of_suborder(f: FieldData, N: int) -> int:
    """Discriminant of Z[N*xD]: field disc times the square of the lattice
    index, the index being the determinant of the basis-change matrix."""
    if N < 1:
        raise ValueError("N must be >= 1")
    index = abs(Mat2(1, 0, 0, N).det)
    return f.D * index * index


def in_suborder(f: FieldData, alpha: AlgInt, N: int) -> bool:
    """Membership of alpha in Z[N*xD], decided twice: the coordinate test
    (N divides b) and the scalar-matrix test (phi(alpha) scalar mod N).
    The two must agree."""
    if N < 1:
        raise ValueError("N must be >= 1")
    by_coord = alpha.b % N == 0
    by_matrix = phi(f, alpha).is_scalar_mod(N)
    if by_coord != by_matrix:
        raise InvariantError("coordinate and matrix membership tests disagree")
    return by_coord


def unit_group_index(f: FieldData, N: int) -> int:
    """(Z[xD]^x : Z[N*xD]^x): least k >= 1 with phi(epsD)^k scalar mod N.

    The k with phi(eps)^k scalar mod N form a subgroup of Z containing the
    matrix order, so the least one is found among the order's divisors.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return 1
    from .matrix_orders import _mat_pow_mod, mat_order_mod

    M = phi(f, f.epsD)
    o = mat_order_mod(M, N)
    Mn = M.mod(N)
    for k in factorize(o).divisors():
        if _mat_pow_mod(Mn, k, N).is_scalar_mod(N):
            return k
    raise InvariantError("no scalar power up to the matrix order")


def R_of(f: FieldData, N: int) -> int:
    """Least k >= 1 with phi(epsD)^k = +I or -I mod N.

    Either the matrix order itself or, when the order is even and the
    half-power lands on -I, half of it. Can exceed unit_group_index(N)
    by a factor of 2 (scalar powers c*I with c != +-1 exist)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N == 1:
        return 1
    from .matrix_orders import _mat_pow_mod, mat_order_mod

    M = phi(f, f.epsD)
    o = mat_order_mod(M, N)
    if o % 2 == 0:
        H = _mat_pow_mod(M.mod(N), o // 2, N)
        minus = Mat2(-1 % N, 0, 0, -1 % N)
        if H == minus:
            return o // 2
    return o


def regulator_of_order(o: OrderSpec) -> float:
    """Regulator of Z[f*xD]: regD times the unit-group index at f. Equals
    the log of the least power of epsD landing inside Z[f*xD]."""
    return o.field.regD * unit_group_index(o.field, o.f)


def conductor_of_surd(f: FieldData, x: Surd) -> int:
    """The l >= 1 with stabilizer order of Z + Z*x equal to Z[l*xD].

    l is the least positive integer with l*xD and l*xD*x both inside
    Z + Z*x; each condition pins l to the multiples of one denominator,
    so l is an lcm rather than a search.
    """
    m, u, v, w = surd_coords(x)
    if m != f.m:
        raise ValueError("surd lies in a different field")
    # membership of q*xi in Z + Z*x reduces to q*f1, q*f2 integral where
    # f2 = xi2*w/v and f1 = xi1 - xi2*u/v  (xi = (xi1, xi2) in basis {1, xD})
    def min_multiplier(xi1: Fraction, xi2: Fraction) -> int:
        f2 = xi2 * w / v
        f1 = xi1 - xi2 * Fraction(u, v)
        return math.lcm(f1.denominator, f2.denominator)

    l1 = min_multiplier(Fraction(0), Fraction(1))  # xD itself
    # xD*x = (-v*nrm + (u + v*t)*xD)/w
    l2 = min_multiplier(Fraction(-v * f.nrm, w), Fraction(u + v * f.t, w))
    return math.lcm(l1, l2)
