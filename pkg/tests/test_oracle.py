import math
from fractions import Fraction

import mpmath as mp
import pytest

from gaussfrac.cf import CFCoefficientStream
from gaussfrac.errors import DomainError
from gaussfrac.oracle import (
    HighPrecisionReal,
    as_fraction,
    cf_exact,
    gcf_limit_highprec,
    ratio_digits,
    series_highprec,
    star_limit_highprec,
)
from gaussfrac.params import ParamTriple

from conftest import GENERIC_Q, geometric_rate

# 60-digit regression constant for F(1/2, 3/2; 9/4; 1/4), frozen once
F_GENERIC_QUARTER_STR = "1.09789785621275800638677336870377317987725048961758003246834"


def test_cf_exact_hand_values():
    s = CFCoefficientStream.original(ParamTriple(1, 1, 2), Fraction(1, 2))
    assert cf_exact(s, 0) == 1
    assert cf_exact(s, 2) == Fraction(10, 9)


def test_star_fraction_approaches_log():
    s = CFCoefficientStream.star(1, 2, Fraction(1, 2))
    val = cf_exact(s, 60)
    with mp.workdps(40):
        assert abs(mp.mpf(val.numerator) / val.denominator - 2 * mp.log(2)) < mp.mpf(10) ** -30


def test_series_highprec_log_case():
    got = series_highprec(ParamTriple(1, 1, 2), Fraction(1, 2), 50)
    assert isinstance(got, HighPrecisionReal) and got.digits == 50
    with mp.workdps(60):
        assert abs(got.value - 2 * mp.log(2)) < mp.mpf(10) ** -48


def test_series_highprec_trivial_and_frozen():
    assert series_highprec(GENERIC_Q, Fraction(0), 30).value == 1
    got = series_highprec(GENERIC_Q, Fraction(1, 4), 60)
    with mp.workdps(70):
        assert abs(got.value - mp.mpf(F_GENERIC_QUARTER_STR)) < mp.mpf(10) ** -55


def test_series_highprec_domain():
    with pytest.raises(DomainError):
        series_highprec(GENERIC_Q, Fraction(3, 2), 30)


def test_as_fraction_exactness():
    assert as_fraction(0.25) == Fraction(1, 4)
    assert as_fraction(Fraction(2, 7)) == Fraction(2, 7)
    assert as_fraction(3) == 3


def test_ratio_digit_scheduling():
    assert ratio_digits(0, 0.5) == 30
    assert ratio_digits(100, 0.1) == 130
    assert ratio_digits(64, 0.25) >= 64 * math.log10(4) + 30 - 1


def test_star_limit_matches_series():
    v1 = star_limit_highprec(1, 2, Fraction(1, 2), 40)
    v2 = series_highprec(ParamTriple(1, 1, 2), Fraction(1, 2), 40).value
    with mp.workdps(50):
        assert abs(v1 - v2) < mp.mpf(10) ** -38


@pytest.mark.parametrize(
    "t,z",
    [
        (GENERIC_Q, Fraction(1, 2)),
        (ParamTriple(Fraction(3, 10), Fraction(7, 10), Fraction(11, 10)), Fraction(1, 4)),
        (ParamTriple(Fraction(6, 5), Fraction(2, 5), Fraction(13, 5)), Fraction(-1, 2)),
    ],
)
def test_oracle_agreement_rate(t, z):
    # fraction gap to the limiting ratio decays at rate |w| within 2%
    s = CFCoefficientStream.original(t, z)
    digits = 80
    with mp.workdps(digits + 10):
        limit = gcf_limit_highprec(t, z, digits)
        gaps = []
        for n in range(12, 61, 4):
            c = cf_exact(s, n)
            gaps.append(abs(limit - mp.mpf(c.numerator) / c.denominator))
    zf = float(z)
    w = abs(zf / (1 + math.sqrt(1 - zf)) ** 2)
    rate = geometric_rate(gaps) ** 0.25  # stride 4
    assert abs(rate - w) <= 0.02 * w
