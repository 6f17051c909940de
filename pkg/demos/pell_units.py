"""Fundamental units, regulators, and what happens inside suborders.

The smallest unit > 1 of the maximal order is read off one period of the
generator's continued fraction. Inside the suborder Z[N*xD] only some
powers of that unit survive; the first surviving exponent multiplies the
regulator.
"""

import math

from quadcf import (
    OrderSpec,
    alg_pow,
    alg_value,
    field_data,
    regulator_of_order,
    unit_group_index,
)


def main() -> None:
    print(f"{'m':>3} {'D':>3} {'unit':>12} {'norm':>5} {'regulator':>12}")
    for m in (2, 3, 5, 13, 61):
        f = field_data(m)
        a, b = f.epsD.a, f.epsD.b
        print(f"{f.m:>3} {f.D:>3} {a:>5}+{b}*xD {f.unit_norm:>5} {f.regD:>12.6f}")

    f = field_data(5)
    print()
    print("suborders Z[N*xD] of the golden field (D = 5):")
    print(f"{'N':>3} {'disc':>6} {'index':>6} {'Reg(O_N)':>10} {'smallest unit':>14}")
    for n in (1, 2, 3, 4, 5, 10):
        o = OrderSpec(f, n)
        k = unit_group_index(f, n)
        reg = regulator_of_order(o)
        # exp(reg) recovered from the exact unit power, not from floats
        val = float(alg_value(f, alg_pow(f, f.epsD, k)))
        print(f"{n:>3} {o.disc:>6} {k:>6} {reg:>10.6f} {val:>14.6f}")
        assert abs(math.exp(reg) - val) < 1e-6

    print()
    print("Reg(O_20) = log(2 + sqrt 5):", regulator_of_order(OrderSpec(f, 2)))


if __name__ == "__main__":
    main()
