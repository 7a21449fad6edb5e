"""Independent ground-truth computations.

Two oracles live here, deliberately sharing no code with the floating
engine:

* ``cf_exact`` -- exact rational convergents of the continued fractions,
  through an integer-scaled three-term recurrence (fractions are cleared
  step by step, so only big-integer arithmetic is performed);
* ``series_highprec`` -- mpmath summation of the hypergeometric series
  with a certified geometric tail bound.

Digit scheduling for truncation-error work follows
ceil(n * log10(1/|w|)) + 30, which leaves >= 25 significant digits in an
error of size |w|^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import DomainError, NonConvergence, ZeroDenominator
from .params import ParamTriple

#: guard digits added on top of any requested precision
GUARD_DIGITS = 10


@dataclass(frozen=True)
class HighPrecisionReal:
    """An mpmath value together with the digit count it was certified at."""

    value: object
    digits: int

    def __float__(self):
        return float(self.value)


def as_fraction(x) -> Fraction:
    """Exact Fraction for int/Fraction/float inputs (floats are dyadic)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"cannot rationalize {x}")
        return Fraction(x)
    if isinstance(x, complex):
        if x.imag != 0.0:
            raise DomainError("exact-rational path needs real parameters")
        return as_fraction(x.real)
    raise TypeError(f"cannot rationalize {type(x).__name__}")


def cf_exact(stream, n: int) -> Fraction:
    """Exact value of the fraction truncated at index n.

    ``stream`` is a CFCoefficientStream (cf module); its parameters and
    variable must be rational.  The forward numerator/denominator
    recurrence is run over integers by clearing each partial quotient's
    denominator, which leaves the convergent A_n/B_n unchanged.
    """
    if n < 0:
        raise ValueError("truncation index must be >= 0")
    a_prev, a_curr = 1, 0  # A_{-1}, A_0
    b_prev, b_curr = 0, 1  # B_{-1}, B_0
    for j in range(n + 1):
        num, den = stream.partial_pair_exact(j)
        # step: A_j = den_b * A_{j-1} + num_a * A_{j-2}, cleared to integers
        pn, pd = num.numerator, num.denominator
        qn, qd = den.numerator, den.denominator
        # multiply the recurrence through by pd*qd; the joint rescaling of
        # (A, B) cancels in the ratio
        a_prev, a_curr = a_curr * pd * qd, qn * pd * a_curr + pn * qd * a_prev
        b_prev, b_curr = b_curr * pd * qd, qn * pd * b_curr + pn * qd * b_prev
    if b_curr == 0:
        raise ZeroDenominator(n)
    return Fraction(a_curr, b_curr)


def _to_mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    return mp.mpf(x)


def series_highprec(t: ParamTriple, z, digits: int) -> HighPrecisionReal:
    """F(a, b; c; z) summed at `digits` certified decimal digits, |z| < 1.

    Stops once the measured term ratio q stays below 1 for five terms and
    the inflated geometric tail |t| * 1.1 q/(1-q) is below 10^-digits of
    the partial sum.
    """
    if digits < 16:
        raise ValueError("digits must be >= 16")
    zq = as_fraction(z)
    if abs(zq) >= 1:
        raise DomainError(f"direct summation needs |z| < 1, got {z}")
    a, b, c = (as_fraction(v) for v in t)
    with mp.workdps(digits + GUARD_DIGITS):
        av, bv, cv, zv = _to_mpf(a), _to_mpf(b), _to_mpf(c), _to_mpf(zq)
        target = mp.mpf(10) ** (-digits)
        term = mp.mpf(1)
        total = mp.mpf(1)
        steady = 0
        max_terms = 64 + int(digits * 8 / max(1e-9, -math.log10(abs(float(zq))))) if zq != 0 else 64
        max_terms = max(max_terms, 4096)
        for k in range(max_terms):
            term = term * (av + k) * (bv + k) / ((cv + k) * (1 + k)) * zv
            if term == 0:
                return HighPrecisionReal(+total, digits)
            total += term
            q = abs(zv) * abs((av + k + 1) * (bv + k + 1) / ((cv + k + 1) * (k + 2)))
            steady = steady + 1 if q < 1 else 0
            if steady >= 5:
                tail = mp.mpf("1.1") * abs(term) * q / (1 - q)
                if tail <= target * abs(total):
                    return HighPrecisionReal(+total, digits)
        raise NonConvergence(f"series at z={z} did not certify {digits} digits in {max_terms} terms")


def ratio_digits(n: int, w: float) -> int:
    """Working digits needed to resolve an error of size |w|^n."""
    if w == 0.0:
        return 30
    return int(math.ceil(n * math.log10(1.0 / abs(w)))) + 30


def gcf_limit_highprec(t: ParamTriple, z, digits: int):
    """F(a+1, b; c+1; z) / F(a, b; c; z) at `digits` digits (mpf).

    For z < 0 both values are pulled back through the map z -> z/(z-1),
    whose image lies in (0, 1); the prefactors collapse to 1/(1-z).
    """
    a, b, c = (as_fraction(v) for v in t)
    zq = as_fraction(z)
    if zq >= 1:
        raise DomainError(f"need z < 1, got {z}")
    with mp.workdps(digits + GUARD_DIGITS):
        if 0 <= zq < 1:
            num = series_highprec(ParamTriple(a + 1, b, c + 1), zq, digits).value
            den = series_highprec(t, zq, digits).value
            return num / den
        zeta = zq / (zq - 1)
        num = series_highprec(ParamTriple(a + 1, c - b + 1, c + 1), zeta, digits).value
        den = series_highprec(ParamTriple(a, c - b, c), zeta, digits).value
        return num / (den * (1 - _to_mpf(zq)))


def star_limit_highprec(b, c, z, digits: int):
    """F(1, b; c; z) at `digits` digits (mpf)."""
    bq, cq, zq = as_fraction(b), as_fraction(c), as_fraction(z)
    if zq >= 1:
        raise DomainError(f"need z < 1, got {z}")
    with mp.workdps(digits + GUARD_DIGITS):
        if 0 <= zq < 1:
            return series_highprec(ParamTriple(Fraction(1), bq, cq), zq, digits).value
        zeta = zq / (zq - 1)
        val = series_highprec(ParamTriple(Fraction(1), cq - bq, cq), zeta, digits).value
        return val / (1 - _to_mpf(zq))
