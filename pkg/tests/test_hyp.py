import math

import pytest

from gaussfrac.errors import DomainError, PoleAtParameter
from gaussfrac.hyp import (
    ContiguousRelation,
    EvalContext,
    FrobeniusKind,
    chi,
    connection_coefficients,
    connection_residuals,
    contiguous_residual,
    frobenius,
    hgf,
    hyp2f1,
)
from gaussfrac.params import K, ONE, P, ParamTriple, shift

from conftest import GENERIC, SMALL, rel_err

# frozen at 60 digits from an independent high-precision summation
HGF_GENERIC_QUARTER = 1.5221263960684767095635804240971132697498481239422747991623
F_GENERIC_QUARTER = 1.09789785621275800638677336870377317987725048961758003246834
CHI_GENERIC = -3.944900158918185189747761810303626088633


def log_cf_value(z: float) -> float:
    # independent closed form F(1,1;2;z) = -log(1-z)/z
    return -math.log1p(-z) / z


def log_cf_value2(z: float) -> float:
    # independent closed form F(1,2;3;z) = 2(-log(1-z) - z)/z^2
    return 2.0 * (-math.log1p(-z) - z) / z**2


def test_hyp2f1_trivial_and_log_cases():
    assert hyp2f1(ParamTriple(1, 1, 2), 0.0) == 1.0
    assert rel_err(hyp2f1(ParamTriple(1, 1, 2), 0.5), log_cf_value(0.5)) < 1e-14
    assert rel_err(hyp2f1(ParamTriple(1, 2, 3), 0.5), log_cf_value2(0.5)) < 1e-14


def test_hyp2f1_negative_argument_against_log_form():
    for z in (-0.5, -2.0, -3.0):
        assert rel_err(hyp2f1(ParamTriple(1, 1, 2), z), log_cf_value(z)) < 1e-13


def test_hyp2f1_frozen_value():
    assert rel_err(hyp2f1(GENERIC, 0.25), F_GENERIC_QUARTER) < 1e-14


def test_hyp2f1_domain_errors():
    with pytest.raises(DomainError):
        hyp2f1(GENERIC, 0.9)  # (3/4, 1) is reserved for connection formulas
    with pytest.raises(DomainError):
        hyp2f1(GENERIC, 1.5)
    with pytest.raises(DomainError):
        hyp2f1(GENERIC, -4.0)  # maps beyond the series cut
    with pytest.raises(PoleAtParameter):
        hyp2f1(ParamTriple(1, 1, 0), 0.5)
    with pytest.raises(PoleAtParameter):
        hyp2f1(ParamTriple(1, 1, -2 + 1e-12), 0.5)


def test_sigma_symmetry_exact():
    for z in (0.6, -1.5):
        assert hyp2f1(GENERIC, z) == hyp2f1(GENERIC.sigma(), z)


def test_pfaff_invariance():
    a, b, c = GENERIC
    for z in (-0.9, -0.5, -0.1, 0.1, 0.3, 0.5, 0.7, 0.75):
        lhs = hyp2f1(GENERIC, z)
        zeta = z / (z - 1.0)
        rhs1 = (1 - z) ** (-a) * hyp2f1(ParamTriple(a, c - b, c), zeta)
        rhs2 = (1 - z) ** (-b) * hyp2f1(ParamTriple(c - a, b, c), zeta)
        assert abs(lhs - rhs1) < 1e-10 * max(1.0, abs(lhs))
        assert abs(lhs - rhs2) < 1e-10 * max(1.0, abs(lhs))


def test_hgf_examples():
    assert hgf(ParamTriple(1, 1, 2), 0.0) == 1.0
    assert rel_err(hgf(ParamTriple(1, 1, 2), 0.5), log_cf_value(0.5)) < 1e-14
    assert rel_err(hgf(GENERIC, 0.25), HGF_GENERIC_QUARTER) < 1e-13


def test_hgf_regularized_at_nonpositive_integer_c():
    # c = 0: the k = 0 term drops and summation starts at k = 1
    val = hgf(ParamTriple(0.5, 0.75, 0.0), 0.5)
    # independent: sum_{k>=1} Gamma(.5+k)Gamma(.75+k)/(Gamma(1+k)Gamma(k)) .5^k
    acc = 0.0
    for k in range(1, 200):
        acc += (
            math.exp(
                math.lgamma(0.5 + k)
                + math.lgamma(0.75 + k)
                - math.lgamma(1.0 + k)
                - math.lgamma(float(k))
            )
            * 0.5**k
        )
    assert rel_err(val, acc) < 1e-13


def test_hgf_pole_guards():
    with pytest.raises(PoleAtParameter):
        hgf(ParamTriple(0, 1, 2), 0.5)  # Gamma(a) pole
    with pytest.raises(PoleAtParameter):
        hgf(ParamTriple(0.5, 0.75, -2 + 1e-9), 0.5)  # near-integer c
    with pytest.raises(PoleAtParameter):
        hgf(ParamTriple(0.5, 0.75, 0.0), -0.5)  # unsupported combination


def test_chi_values_and_identity():
    assert rel_err(chi(GENERIC), CHI_GENERIC) < 1e-13
    # chi * Gamma(c-a) Gamma(c-b) sin(c-a) sin(c-b) = pi sin(pi c)
    t = ParamTriple(0.3, 0.7, 1.1)
    lhs = (
        chi(t)
        * math.gamma(1.1 - 0.3)
        * math.gamma(1.1 - 0.7)
        * math.sin(math.pi * (1.1 - 0.3))
        * math.sin(math.pi * (1.1 - 0.7))
    )
    assert rel_err(lhs, math.pi * math.sin(math.pi * 1.1)) < 1e-12
    assert chi(t) != 0.0


def test_chi_pole():
    with pytest.raises(PoleAtParameter):
        chi(ParamTriple(0.25, 0.5, 1.25))  # c - a = 1 integer


def test_frobenius_first_solution_is_rescaled_series():
    assert frobenius(FrobeniusKind.Y1_0, ParamTriple(1, 1, 2), 0.5) == hgf(
        ParamTriple(1, 1, 2), 0.5
    )
    assert rel_err(frobenius(FrobeniusKind.Y1_0, ParamTriple(1, 1, 2), 0.5), log_cf_value(0.5)) < 1e-14


def test_frobenius_second_solution_construction():
    a, b, c = GENERIC
    z = 0.25
    direct = z ** (1 - c) * hgf(ParamTriple(a - c + 1, b - c + 1, 2 - c), z)
    assert rel_err(frobenius(FrobeniusKind.Y2_0, GENERIC, z), direct) < 1e-14


def test_frobenius_domains():
    with pytest.raises(DomainError):
        frobenius(FrobeniusKind.Y2_0, GENERIC, -0.5)
    with pytest.raises(DomainError):
        frobenius(FrobeniusKind.Y1_1, GENERIC, -0.5)
    with pytest.raises(DomainError):
        frobenius(FrobeniusKind.Y1_INF, GENERIC, 0.5)
    with pytest.raises(DomainError):
        frobenius(FrobeniusKind.Y1_INF, GENERIC, -0.2)  # maps past the series cut


def test_connection_residuals_generic():
    for t in (GENERIC, SMALL, ParamTriple(0.4, 1.2, 1.85)):
        residuals = connection_residuals(t, 0.5)
        assert max(residuals) < 1e-10


def test_connection_formula_first_at_one_example():
    # y1@1 = y1@0 - y2@0 at the canonical point
    y11 = frobenius(FrobeniusKind.Y1_1, GENERIC, 0.5)
    y10 = frobenius(FrobeniusKind.Y1_0, GENERIC, 0.5)
    y20 = frobenius(FrobeniusKind.Y2_0, GENERIC, 0.5)
    assert abs(y11 - (y10 - y20)) < 1e-10


def test_connection_coefficients_integer_periodicity():
    base = connection_coefficients(GENERIC)
    for v in (P, K, ONE):
        for times in (1, 3, -2):
            shifted = connection_coefficients(shift(GENERIC, v, times))
            for key in base:
                assert base[key][0] == pytest.approx(shifted[key][0], rel=1e-12, abs=1e-12)


def test_connection_degenerate_parameters():
    with pytest.raises(PoleAtParameter):
        connection_residuals(ParamTriple(0.5, 1.5, 2.0), 0.5)  # integer c


CONTIG_CASES = [
    (kind, which)
    for kind in FrobeniusKind
    for which in (ContiguousRelation.STEP_A, ContiguousRelation.STEP_B, ContiguousRelation.STEP_DOWN)
]


@pytest.mark.parametrize("kind,which", CONTIG_CASES)
def test_simultaneous_contiguous_relations(kind, which):
    z = -2.0 if kind in (FrobeniusKind.Y1_INF, FrobeniusKind.Y2_INF) else 0.5
    assert contiguous_residual(GENERIC, z, kind, which) < 1e-10


@pytest.mark.parametrize("kind", list(FrobeniusKind))
def test_contiguous_relations_second_point(kind):
    t = ParamTriple(0.35, 1.15, 1.8)
    z = -0.75 if kind in (FrobeniusKind.Y1_INF, FrobeniusKind.Y2_INF) else 0.4
    assert contiguous_residual(t, z, kind, ContiguousRelation.STEP_A) < 1e-9
    assert contiguous_residual(t, z, kind, ContiguousRelation.STEP_B) < 1e-9


@pytest.mark.parametrize("kind", [FrobeniusKind.Y1_0, FrobeniusKind.Y2_0])
def test_derivative_shifts_all_parameters(kind):
    # d/dz y_i@0(t; z) = y_i@0(t + (1,1;1); z), central differences
    t, z, h = GENERIC, 0.4, 1e-6
    num = (frobenius(kind, t, z + h) - frobenius(kind, t, z - h)) / (2 * h)
    exact = frobenius(kind, shift(t, ONE), z)
    assert rel_err(num, exact) < 1e-6


def test_eval_context_validation():
    with pytest.raises(ValueError):
        EvalContext(working_precision=8)
    with pytest.raises(ValueError):
        EvalContext(tail_tolerance=0.0)
    with pytest.raises(ValueError):
        EvalContext(max_terms=10)
