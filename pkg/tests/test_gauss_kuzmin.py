import math
import random
from fractions import Fraction

import pytest

from quadcf.gauss_kuzmin import (
    Cylinder,
    GaussMeasure,
    Pattern,
    c_w,
    cylinder,
    deviation,
    pattern_frequency,
)
from quadcf.surd import cf_expand, make_surd
from helpers import random_surd


def test_single_digit_cylinders():
    # x starts with digit a exactly when x is in [1/(a+1), 1/a]
    for a in range(1, 30):
        cyl = cylinder((a,))
        assert (cyl.low, cyl.high) == (Fraction(1, a + 1), Fraction(1, a))


def test_two_digit_cylinder():
    cyl = cylinder((1, 1))
    assert (cyl.low, cyl.high) == (Fraction(1, 2), Fraction(2, 3))
    cyl = cylinder((2, 3))
    # [0;2,3] = 3/7, mediant with [0;2] = 1/2 gives 4/9
    assert (cyl.low, cyl.high) == (Fraction(3, 7), Fraction(4, 9))


def test_cylinder_endpoints_from_continuant_oracle():
    rng = random.Random(90)
    for _ in range(200):
        w = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 6)))
        # continuants of [0; w] via the standard recurrence
        p0, q0, p1, q1 = 1, 0, 0, 1
        for a in w:
            p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        end = Fraction(p1, q1)
        med = Fraction(p1 + p0, q1 + q0)
        cyl = cylinder(w)
        assert {cyl.low, cyl.high} == {end, med}
        assert cyl.low < cyl.high


def test_cylinder_validation():
    with pytest.raises(ValueError):
        cylinder(())
    with pytest.raises(ValueError):
        cylinder((0,))
    with pytest.raises(ValueError):
        Cylinder(Fraction(1, 2), Fraction(1, 2))


def test_measure_ratios_are_exact():
    assert c_w((1,)).ratio == Fraction(4, 3)
    assert c_w((2,)).ratio == Fraction(9, 8)
    assert c_w((1, 1)).ratio == Fraction(10, 9)
    assert abs(c_w((1, 1)).as_float() - 0.1520031) < 1e-7


def test_single_digit_measures_telescope():
    # the product of (a+1)^2 / (a(a+2)) collapses to 2(A+1)/(A+2)
    for bound in (1, 10, 100, 1000):
        prod = Fraction(1)
        for a in range(1, bound + 1):
            prod *= c_w((a,)).ratio
        assert prod == Fraction(2 * (bound + 1), bound + 2)


def test_measure_as_float_matches_log2():
    g = c_w((3, 1, 2))
    assert isinstance(g, GaussMeasure)
    assert abs(g.as_float() - math.log2(g.ratio)) < 1e-15
    assert g.as_float() > 0


def test_pattern_frequency_golden_ratio():
    e = cf_expand(make_surd(1, 1, 5, 2))  # all digits are 1
    assert pattern_frequency(e, (1,)) == 1
    assert pattern_frequency(e, (1, 1, 1)) == 1
    assert pattern_frequency(e, (2,)) == 0


def test_pattern_frequency_counts_cyclically():
    e = cf_expand(make_surd(0, 1, 8, 1))  # sqrt(8) = [2; 1, 4 repeating]
    assert e.period == (1, 4)
    assert pattern_frequency(e, (1,)) == Fraction(1, 2)
    assert pattern_frequency(e, (4, 1)) == Fraction(1, 2)  # wraps around
    assert pattern_frequency(e, (1, 4, 1)) == Fraction(1, 2)  # longer than period
    assert pattern_frequency(e, (1, 1)) == 0


def test_pattern_frequency_matches_string_oracle():
    rng = random.Random(91)
    for _ in range(200):
        x = random_surd(rng)
        e = cf_expand(x)
        L = len(e.period)
        w = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        # count occurrences in the doubled-period word, windows starting
        # in the first copy
        ext = e.period * (2 + len(w) // max(L, 1))
        count = sum(
            1 for i in range(L) if tuple(ext[i : i + len(w)]) == w
        )
        assert pattern_frequency(e, w) == Fraction(count, L)


def test_refinement_identity_is_exact():
    # the frequency of w is the sum of the frequencies of w extended by
    # one more digit, since every occurrence has exactly one successor
    rng = random.Random(92)
    for _ in range(100):
        x = random_surd(rng)
        e = cf_expand(x)
        w = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        total = sum(
            (pattern_frequency(e, w + (a,)) for a in range(1, max(e.period) + 1)),
            Fraction(0),
        )
        assert total == pattern_frequency(e, w)


def test_deviation_value_for_sqrt8():
    x = make_surd(0, 1, 8, 1)
    want = abs(0.5 - math.log2(Fraction(4, 3)))
    assert abs(deviation(x, (1,)) - want) < 1e-12
    assert abs(want - 0.08496250072115608) < 1e-15


def test_pattern_label():
    assert Pattern((1, 1)).label() == "1-1"
    assert Pattern((12,)).label() == "12"
    with pytest.raises(ValueError):
        Pattern(())
    with pytest.raises(ValueError):
        Pattern((1, 0))
