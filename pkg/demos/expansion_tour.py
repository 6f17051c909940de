"""Tour of exact continued-fraction expansions of quadratic surds.

Expands a handful of classics, shows preperiod and period, and checks the
textbook convergent quality |x - p/q| < 1/q^2 with exact arithmetic.
"""

from fractions import Fraction

from quadcf import cf_expand, compare_to_fraction, convergents, make_surd

CLASSICS = [
    ("sqrt(2)", (0, 1, 2, 1)),
    ("sqrt(3)", (0, 1, 3, 1)),
    ("sqrt(7)", (0, 1, 7, 1)),
    ("sqrt(13)", (0, 1, 13, 1)),
    ("golden ratio", (1, 1, 5, 2)),
    ("(3+sqrt(29))/10", (3, 1, 29, 10)),
]


def main() -> None:
    for name, args in CLASSICS:
        x = make_surd(*args)
        e = cf_expand(x)
        pre = " ".join(map(str, e.preperiod)) or "(empty)"
        per = " ".join(map(str, e.period))
        print(f"{name:16s} preperiod: {pre:12s} period: [{per}]  length {e.period_length}")

    print()
    x = make_surd(0, 1, 2, 1)
    print("convergents of sqrt(2) and the exact bound |x - p/q| < 1/q^2:")
    for k, (p, q) in enumerate(convergents(cf_expand(x).digits(8)), 1):
        target = Fraction(p, q)
        err = Fraction(1, q * q)
        inside = (
            compare_to_fraction(x, target - err) > 0
            and compare_to_fraction(x, target + err) < 0
        )
        print(f"  k={k}: {p}/{q}  within 1/q^2: {inside}")


if __name__ == "__main__":
    main()
