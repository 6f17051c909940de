"""How often does a digit pattern occur in a quadratic CF period?

For random real numbers the digit statistics follow the Gauss measure:
digit a appears with density log2((a+1)^2 / (a(a+2))). A single quadratic
surd has an eventually periodic expansion, so its empirical pattern
frequency is an exact rational; this script compares the two for
multiples N*sqrt(2) and watches the deviation shrink as N grows.
"""

from quadcf import Pattern, c_w, cf_expand, make_surd, pattern_frequency, scale


def main() -> None:
    for w in [(1,), (2,), (1, 1)]:
        m = c_w(w)
        print(f"pattern {Pattern(w).label()}: measure log2({m.num}/{m.den}) = {m.as_float():.6f}")
    print()

    base = make_surd(0, 1, 2, 1)
    print("pattern (1) along N*sqrt(2):")
    print(f"{'N':>6} {'period':>7} {'freq':>10} {'deviation':>10}")
    for n in (2, 10, 100, 1000, 10000):
        e = cf_expand(scale(base, n))
        freq = pattern_frequency(e, (1,))
        dev = abs(freq.numerator / freq.denominator - c_w((1,)).as_float())
        print(f"{n:>6} {e.period_length:>7} {str(freq):>10} {dev:>10.6f}")

    print()
    print("the refinement identity holds exactly (rational equality):")
    e = cf_expand(scale(base, 1234))
    lhs = pattern_frequency(e, (1,))
    rhs = sum(pattern_frequency(e, (1, b)) for b in range(1, max(e.period) + 1))
    print(f"  freq(1) = {lhs} = sum_b freq(1,b) = {rhs}: {lhs == rhs}")


if __name__ == "__main__":
    main()
