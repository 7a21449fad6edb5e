"""Coefficients, convergents and actual truncation errors of the Gauss
continued fraction, its a->0 specialization, and the rescaled variant.

The classical fraction has unit partial denominators and partial
numerators R(n); the rescaled variant uses pairs (q(n), r(n)) tied to the
three-term recurrence y(n) = q(n) y(n+1) + r(n+1) y(n+2).  Both truncate,
for rational data, to exact rationals; `truncation_error_actual`
subtracts the convergent from a high-precision value of the limiting
ratio, at a working precision scheduled from the geometric decay rate so
the reported error keeps >= 25 significant digits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import Inadmissible, ZeroDenominator, ZeroTarget
from .oracle import (
    as_fraction,
    cf_exact,
    gcf_limit_highprec,
    ratio_digits,
    series_highprec,
    star_limit_highprec,
)
from .params import ParamTriple, check_gcf_admissible, check_star_admissible

_RESCALE_LIMIT = 1e250


class CFVariant(enum.Enum):
    ORIGINAL = "original"
    STAR = "star"
    RESCALED = "rescaled"


@dataclass(frozen=True)
class CFCoefficientStream:
    """A concrete fraction: variant, parameters and variable.

    For STAR the triple's `a` slot is unused (set to 1 by `star`); only
    (b; c) matter.
    """

    variant: CFVariant
    params: ParamTriple
    z: object

    @staticmethod
    def original(t: ParamTriple, z) -> "CFCoefficientStream":
        if not check_gcf_admissible(t):
            raise Inadmissible(
                f"(a, b; c)={tuple(t)} violates a, c-b not in Z<=-1 / b, c, c-a not in Z<=0"
            )
        return CFCoefficientStream(CFVariant.ORIGINAL, t, z)

    @staticmethod
    def star(b, c, z) -> "CFCoefficientStream":
        if not check_star_admissible(b, c):
            raise Inadmissible(f"(b; c)=({b}, {c}) violates b, c, c-b not in Z<=0")
        return CFCoefficientStream(CFVariant.STAR, ParamTriple(1, b, c), z)

    @staticmethod
    def rescaled(t: ParamTriple, z) -> "CFCoefficientStream":
        if not check_gcf_admissible(t):
            raise Inadmissible(
                f"(a, b; c)={tuple(t)} violates a, c-b not in Z<=-1 / b, c, c-a not in Z<=0"
            )
        return CFCoefficientStream(CFVariant.RESCALED, t, z)

    # -- coefficient formulas -------------------------------------------------

    def numerator(self, n: int, a, b, c, z):
        """Partial numerator at index n (R(n), R*(n) or r(n))."""
        if n == 0:
            return 1
        m = (n - 1) // 2
        if self.variant is CFVariant.ORIGINAL:
            if n % 2:  # n = 2m+1
                return -(m + b) * (m + c - a) * z / ((2 * m + c) * (2 * m + c + 1))
            return -(m + a + 1) * (m + c - b + 1) * z / ((2 * m + c + 1) * (2 * m + c + 2))
        if self.variant is CFVariant.STAR:
            if n % 2:
                return -(m + b) * (m + c - 1) * z / ((2 * m + c - 1) * (2 * m + c))
            return -(m + 1) * (m + c - b) * z / ((2 * m + c) * (2 * m + c + 1))
        # rescaled r(n)
        if n % 2:
            return -(m + c - a) * z / (m + a)
        return -(m + c - b + 1) * z / (m + b)

    def denominator(self, n: int, a, b, c):
        """Partial denominator at index n (1, or q(n) for the rescaled variant)."""
        if self.variant is not CFVariant.RESCALED:
            return 1
        m = n // 2
        if n % 2:
            return (2 * m + c + 1) / (m + b)
        return (2 * m + c) / (m + a)

    def partial_pair(self, n: int):
        """(numerator, denominator) at index n in the inputs' arithmetic."""
        a, b, c = self.params
        return self.numerator(n, a, b, c, self.z), self.denominator(n, a, b, c)

    def partial_pair_exact(self, n: int):
        """Same as partial_pair but over exact Fractions."""
        a = as_fraction(self.params.a)
        b = as_fraction(self.params.b)
        c = as_fraction(self.params.c)
        z = as_fraction(self.z)
        num = self.numerator(n, a, b, c, z)
        den = self.denominator(n, a, b, c)
        return as_fraction(num), as_fraction(den)


def coefficient(stream: CFCoefficientStream, n: int):
    """Coefficient data at index n: R(n) for the classical variants, or the
    recurrence-aligned pair (q(n), r(n+1)) for the rescaled one."""
    if n < 0:
        raise ValueError("index must be >= 0")
    a, b, c = stream.params
    if stream.variant is CFVariant.RESCALED:
        return stream.denominator(n, a, b, c), stream.numerator(n + 1, a, b, c, stream.z)
    return stream.numerator(n, a, b, c, stream.z)


@dataclass(frozen=True)
class CFState:
    """Forward-recurrence state; `value` is the convergent A/B."""

    A_prev: float
    A_curr: float
    B_prev: float
    B_curr: float
    index: int

    @staticmethod
    def initial() -> "CFState":
        return CFState(1.0, 0.0, 0.0, 1.0, -1)

    def advance(self, num, den) -> "CFState":
        a_new = den * self.A_curr + num * self.A_prev
        b_new = den * self.B_curr + num * self.B_prev
        state = CFState(self.A_curr, a_new, self.B_curr, b_new, self.index + 1)
        if max(abs(a_new), abs(b_new)) > _RESCALE_LIMIT:
            state = CFState(
                state.A_prev / _RESCALE_LIMIT,
                state.A_curr / _RESCALE_LIMIT,
                state.B_prev / _RESCALE_LIMIT,
                state.B_curr / _RESCALE_LIMIT,
                state.index,
            )
        return state

    @property
    def value(self):
        if self.B_curr == 0.0:
            raise ZeroDenominator(self.index)
        return self.A_curr / self.B_curr


def convergent(stream: CFCoefficientStream, n: int, exact: bool = False):
    """Value of the fraction truncated at index n.

    exact=True runs the integer-scaled rational recurrence and returns a
    Fraction (rational inputs required); otherwise floating forward
    recurrences are used.
    """
    if exact:
        return cf_exact(stream, n)
    state = CFState.initial()
    for j in range(n + 1):
        num, den = stream.partial_pair(j)
        state = state.advance(float(num), float(den))
    return state.value


def convergent_checkpoints(stream: CFCoefficientStream, ns) -> dict:
    """Exact convergents at several indices in a single forward pass."""
    want = sorted(set(int(n) for n in ns))
    out = {}
    top = want[-1]
    # reuse cf_exact's scheme but record intermediate values
    a_prev, a_curr, b_prev, b_curr = 1, 0, 0, 1
    for j in range(top + 1):
        num, den = stream.partial_pair_exact(j)
        pn, pd = num.numerator, num.denominator
        qn, qd = den.numerator, den.denominator
        a_prev, a_curr = a_curr * pd * qd, qn * pd * a_curr + pn * qd * a_prev
        b_prev, b_curr = b_curr * pd * qd, qn * pd * b_curr + pn * qd * b_prev
        if j in want:
            if b_curr == 0:
                raise ZeroDenominator(j)
            out[j] = Fraction(a_curr, b_curr)
    return out


def _dilation(z: float) -> float:
    # w = z / (1 + sqrt(1-z))^2; kept local to avoid a cycle with asym
    root = (1.0 - float(z)) ** 0.5
    return float(z) / (1.0 + root) ** 2


def _to_mpf(fr: Fraction):
    return mp.mpf(fr.numerator) / mp.mpf(fr.denominator)


def truncation_error_actual(
    t: ParamTriple, z, n: int, rescaled: bool = False, min_digits: int = 30
):
    """E_n = F(a+1,b;c+1;z)/F(a,b;c;z) - convergent(n), as an mpf.

    rescaled=True returns instead the error of the rescaled fraction
    against its limit hgf(a+1,b;c+1;z)/hgf(a,b;c;z); the two differ by the
    constant factor a/c.  Working precision is scheduled from the decay
    rate |w|^n.
    """
    zq = as_fraction(z)
    if zq == 0:
        return mp.mpf(0)
    digits = max(min_digits, ratio_digits(n, _dilation(float(zq))))
    variant = CFVariant.RESCALED if rescaled else CFVariant.ORIGINAL
    stream = (
        CFCoefficientStream.rescaled(t, zq) if rescaled else CFCoefficientStream.original(t, zq)
    )
    conv = cf_exact(stream, n)
    with mp.workdps(digits + 10):
        ratio = gcf_limit_highprec(t, zq, digits)
        if rescaled:
            a = as_fraction(t.a)
            c = as_fraction(t.c)
            ratio = ratio * _to_mpf(a / c)
        return +(ratio - _to_mpf(conv))


def truncation_error_star_actual(b, c, z, n: int, min_digits: int = 30):
    """E*_n = F(1,b;c;z) - star convergent(n), as an mpf."""
    zq = as_fraction(z)
    if zq == 0:
        return mp.mpf(0)
    digits = max(min_digits, ratio_digits(n, _dilation(float(zq))))
    stream = CFCoefficientStream.star(b, c, zq)
    conv = cf_exact(stream, n)
    with mp.workdps(digits + 10):
        limit = star_limit_highprec(b, c, zq, digits)
        return +(limit - _to_mpf(conv))


def reference_value(t: ParamTriple, z, digits: int = 30):
    """|F(a,b;c;z)| gate: raises ZeroTarget when the base value vanishes."""
    zq = as_fraction(z)
    if 0 <= zq < 1:
        val = series_highprec(t, zq, digits).value
    else:
        zeta = zq / (zq - 1)
        a, b, c = (as_fraction(v) for v in t)
        with mp.workdps(digits + 10):
            val = series_highprec(ParamTriple(a, c - b, c), zeta, digits).value
            val = val * mp.power(1 - _to_mpf(zq), -_to_mpf(a))
    if abs(val) < 1e-8:
        raise ZeroTarget(f"|F(a,b;c;z)| = {float(abs(val)):.3e} below 1e-8")
    return val
