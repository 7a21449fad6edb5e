import math

from hypothesis import given, strategies as st

from gaussfrac.params import (
    K,
    ONE,
    P,
    ParamTriple,
    ShiftVector,
    check_gcf_admissible,
    check_star_admissible,
    shift,
)


def test_shift_examples():
    assert shift(ParamTriple(1, 1, 2), P, 1) == ParamTriple(2, 2, 4)
    assert shift(ParamTriple(1, 1, 2), K, 0) == ParamTriple(1, 1, 2)
    assert shift(ParamTriple(0.5, 1.5, 2.25), P, 3) == ParamTriple(3.5, 4.5, 8.25)


def test_builtin_vectors():
    assert P == K + K.sigma()
    assert ONE == ShiftVector(1, 1, 1)


def test_sigma_involution():
    t = ParamTriple(0.3, 0.7, 1.1)
    assert t.sigma().sigma() == t


@given(
    st.integers(-20, 20),
    st.integers(-20, 20),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
)
def test_shifts_compose_additively(m, n, a, b, c):
    t = ParamTriple(a + 0.125, b + 0.25, c + 0.375)
    two_step = shift(shift(t, P, m), P, n)
    one_step = shift(t, P, m + n)
    assert two_step == one_step


def test_gcf_admissible_examples():
    assert check_gcf_admissible(ParamTriple(1, 1, 2)) is True
    assert check_gcf_admissible(ParamTriple(-1, 1, 2)) is False  # a in Z<=-1
    assert check_gcf_admissible(ParamTriple(1, 1, 1)) is False  # c-a = 0
    assert check_gcf_admissible(ParamTriple(1, 2, 2)) is True  # c-b = 0 is allowed


def test_gcf_admissible_near_integer_tolerance():
    # within 1e-9 of a forbidden integer: rejected
    assert check_gcf_admissible(ParamTriple(-1 + 1e-12, 1, 2)) is False
    assert check_gcf_admissible(ParamTriple(-1 + 1e-6, 1, 2)) is True


@given(
    st.integers(-4, 4),
    st.integers(-4, 4),
    st.integers(-4, 4),
    st.sampled_from([0.0, 0.25, 0.5]),
    st.sampled_from([0.0, 0.25, 0.5]),
    st.sampled_from([0.0, 0.25, 0.5]),
)
def test_gcf_admissibility_swap_symmetry(ia, ib, ic, fa, fb, fc):
    # the defining conjunction, with the two integer-forbidden lists
    # exchanged, evaluated after swapping a and b, is the same predicate
    def swapped_form(t):
        a, b, c = t.a, t.b, t.c

        def low(x):  # x in Z<=0
            return abs(x - round(x)) <= 1e-9 and round(x) <= 0

        def lower(x):  # x in Z<=-1
            return abs(x - round(x)) <= 1e-9 and round(x) <= -1

        return not (low(a) or low(c) or low(c - b) or lower(b) or lower(c - a))

    t = ParamTriple(ia + fa, ib + fb, ic + fc)
    assert check_gcf_admissible(t) == swapped_form(t.sigma())


def test_star_admissible_examples():
    assert check_star_admissible(1, 2) is True
    assert check_star_admissible(0, 2) is False
    assert check_star_admissible(1, 1) is False  # c - b = 0


def test_triples_support_real_and_complex():
    t = ParamTriple(0.5 + 0.25j, 1.5, 2.25)
    s = shift(t, P, 2)
    assert s.a == 2.5 + 0.25j and math.isclose(s.c.real if isinstance(s.c, complex) else s.c, 6.25)
