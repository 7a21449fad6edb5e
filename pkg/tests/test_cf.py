import math
from fractions import Fraction

import mpmath as mp
import pytest

from gaussfrac.cf import (
    CFCoefficientStream,
    CFState,
    CFVariant,
    coefficient,
    convergent,
    convergent_checkpoints,
    truncation_error_actual,
    truncation_error_star_actual,
)
from gaussfrac.errors import Inadmissible, ZeroDenominator
from gaussfrac.hyp import ContiguousRelation, FrobeniusKind, contiguous_residual, hyp2f1
from gaussfrac.oracle import cf_exact
from gaussfrac.params import K, P, ParamTriple, shift

from conftest import GENERIC, GENERIC_Q, rel_err


def test_original_coefficients():
    s = CFCoefficientStream.original(ParamTriple(1, 1, 2), Fraction(1, 2))
    assert coefficient(s, 0) == 1
    assert coefficient(s, 1) == Fraction(-1, 12)
    assert coefficient(s, 2) == Fraction(-1, 6)


def test_rescaled_coefficients():
    s = CFCoefficientStream.rescaled(ParamTriple(1, 1, 2), Fraction(1, 2))
    q0, r1 = coefficient(s, 0)
    q1, r2 = coefficient(s, 1)
    assert q0 == 2 and r1 == Fraction(-1, 2)
    assert q1 == 3 and r2 == Fraction(-1, 1)


def test_zero_variable_kills_numerators():
    for maker in (CFCoefficientStream.original, CFCoefficientStream.rescaled):
        s = maker(ParamTriple(1, 1, 2), Fraction(0))
        for n in (1, 2, 7):
            coeff = coefficient(s, n)
            num = coeff[1] if isinstance(coeff, tuple) else coeff
            assert num == 0
    st = CFCoefficientStream.star(1, 2, Fraction(0))
    assert coefficient(st, 3) == 0


def test_inadmissible_parameters_rejected():
    with pytest.raises(Inadmissible):
        CFCoefficientStream.original(ParamTriple(-1, 1, 2), 0.5)
    with pytest.raises(Inadmissible):
        CFCoefficientStream.star(0, 2, 0.5)


def test_convergent_trivial_and_limit():
    s = CFCoefficientStream.original(ParamTriple(1, 1, 2), 0.5)
    assert convergent(s, 0) == 1.0
    # limit is F(2,1;3;1/2)/F(1,1;2;1/2), both with log closed forms
    limit = (8 * (math.log(2) - 0.5)) / (2 * math.log(2))
    assert rel_err(convergent(s, 60), limit) < 1e-13


def test_exact_and_float_modes_agree():
    s = CFCoefficientStream.original(GENERIC_Q, Fraction(1, 4))
    sf = CFCoefficientStream.original(GENERIC, 0.25)
    for n in (5, 50, 200):
        exact = convergent(s, n, exact=True)
        assert isinstance(exact, Fraction)
        assert rel_err(float(exact), convergent(sf, n)) < 1e-12


def test_rescaled_equivalence_is_exact():
    a, c = Fraction(1, 2), Fraction(9, 4)
    orig = CFCoefficientStream.original(GENERIC_Q, Fraction(1, 4))
    resc = CFCoefficientStream.rescaled(GENERIC_Q, Fraction(1, 4))
    for n in range(0, 101, 7):
        assert cf_exact(orig, n) == (c / a) * cf_exact(resc, n)


def test_state_advance_and_zero_denominator():
    state = CFState.initial()
    state = state.advance(1.0, 1.0)
    assert state.value == 1.0
    bad = CFState(1.0, 1.0, 0.5, 0.0, 3)
    with pytest.raises(ZeroDenominator) as info:
        _ = bad.value
    assert info.value.index == 3


def test_classical_recurrence_of_hypergeometric_sequence():
    # F(n) = F(n+1) + R(n+1) F(n+2) with F(2m) = F(t + m P), F(2m+1) = F(t + m P + K)
    t, z = GENERIC, 0.4
    s = CFCoefficientStream.original(t, z)

    def F(n):
        m, odd = divmod(n, 2)
        base = shift(t, P, m)
        return hyp2f1(shift(base, K) if odd else base, z)

    for n in range(0, 31):
        lhs = F(n)
        rhs = F(n + 1) + coefficient(s, n + 1) * F(n + 2)
        assert rel_err(lhs, rhs) < 1e-9


@pytest.mark.parametrize("kind", list(FrobeniusKind))
def test_rescaled_recurrence_all_solutions(kind):
    # y(n) = q(n) y(n+1) + r(n+1) y(n+2) is the shifted two-step relation
    z = -2.0 if kind in (FrobeniusKind.Y1_INF, FrobeniusKind.Y2_INF) else 0.5
    for m in (0, 1, 2):
        base = shift(GENERIC, P, m)
        assert contiguous_residual(base, z, kind, ContiguousRelation.STEP_A) < 1e-9
        assert contiguous_residual(base, z, kind, ContiguousRelation.STEP_B) < 1e-9


def test_truncation_error_zero_variable():
    for n in (0, 3, 17):
        assert truncation_error_actual(GENERIC_Q, Fraction(0), n) == 0


def test_truncation_error_geometric_decay():
    # E_n settles onto sign-definite geometric decay at rate w = 3 - 2 sqrt(2);
    # parity-safe stride of 2 (odd/even truncations carry different subleading terms)
    t = ParamTriple(Fraction(1), Fraction(1), Fraction(2))
    w = 0.5 / (1 + math.sqrt(0.5)) ** 2
    assert abs(w - (3 - 2 * math.sqrt(2))) < 1e-15
    errors = [truncation_error_actual(t, Fraction(1, 2), n) for n in (18, 20, 22, 24)]
    assert all(e > 0 for e in errors)
    for e0, e1 in zip(errors, errors[1:]):
        assert abs(float(e1 / e0) - w**2) < 0.02 * w**2


def test_star_error_against_log_closed_form():
    # E*_n for (b; c) = (1; 2) is -log(1-z)/z minus the fraction
    z = Fraction(1, 2)
    n = 16
    actual = truncation_error_star_actual(1, 2, z, n)
    st = CFCoefficientStream.star(1, 2, z)
    conv = cf_exact(st, n)
    with mp.workdps(40):
        direct = -mp.log(1 - mp.mpf(0.5)) / mp.mpf(0.5) - mp.mpf(conv.numerator) / conv.denominator
        assert abs(actual - direct) < mp.mpf(10) ** -25


def test_rescaled_truncation_error_scaling():
    # rescaled error = (a/c) * classical error
    z = Fraction(1, 4)
    e = truncation_error_actual(GENERIC_Q, z, 12)
    er = truncation_error_actual(GENERIC_Q, z, 12, rescaled=True)
    assert abs(er - e * Fraction(1, 2) / Fraction(9, 4)) < mp.mpf(10) ** -25


def test_checkpoints_match_individual_runs():
    s = CFCoefficientStream.original(GENERIC_Q, Fraction(1, 2))
    marks = convergent_checkpoints(s, [4, 8, 16])
    for n, val in marks.items():
        assert val == cf_exact(s, n)


def test_pincherle_limit_rate():
    # convergents approach the ratio at geometric rate |w|
    t, z = GENERIC_Q, Fraction(1, 2)
    s = CFCoefficientStream.original(t, z)
    with mp.workdps(60):
        from gaussfrac.oracle import gcf_limit_highprec

        limit = gcf_limit_highprec(t, z, 50)
        gaps = []
        for n in range(10, 41, 3):
            c = cf_exact(s, n)
            gaps.append(abs(limit - mp.mpf(c.numerator) / c.denominator))
    w = abs(0.5 / (1 + math.sqrt(0.5)) ** 2)
    from conftest import geometric_rate

    rate = geometric_rate(gaps) ** (1.0 / 3.0)  # stride 3
    assert abs(rate - w) < 0.02 * w
