"""Closed-form asymptotics for the Gauss continued fraction machinery.

Everything here stems from the three-term recurrence behind the fraction:
the gamma-rescaled hypergeometric sequence is its recessive solution, one
solution at 1 (for 0 < z < 1) or at infinity (for z < 0) is dominant, and
their ratio h(n) together with the Casoratian of the pair yields the exact
leading behaviour of the truncation error,

    E_n ~ (2 pi / F^2) * GammaRatio * z (1-z)^(c-a-b)
          / (1 + sqrt(1-z))^(2(c+1)) * w^n,
    w = z / (1 + sqrt(1-z))^2,  |w| < 1 for z < 1.

Only leading constants are produced; the remainder is an O(n^(-1/2))
relative band that the tests check empirically.
"""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass

import mpmath as mp

from .errors import OutOfRegime, PoleAtParameter, ZeroTarget
from .gammafn import log_abs_gamma, gamma_sign, powr, real_gamma, sinpi
from .hyp import (
    DEFAULT_CTX,
    EvalContext,
    FrobeniusKind,
    SINE_TOL,
    frobenius,
    hgf,
    hyp2f1,
)
from .params import ParamTriple, check_gcf_admissible, check_star_admissible

log = logging.getLogger(__name__)


def dilation(z: float) -> float:
    """Geometric decay rate w = z (1 + sqrt(1-z))^(-2) of the truncation
    error; |w| < 1 for every z < 1, with w = 0 at z = 0."""
    z = float(z)
    if z >= 1.0:
        raise ValueError(f"need z < 1, got {z}")
    return z / (1.0 + math.sqrt(1.0 - z)) ** 2


def recessive_components(t: ParamTriple, z: float):
    """Saddle data of the integral representation behind the recessive
    solution: location x0, phase value Phi(x0), curvature phi''(x0) and
    amplitude u(x0)."""
    a, b, c = t
    z = float(z)
    s = math.sqrt(1.0 - z)
    x0 = 1.0 / (1.0 + s)
    phi_x0 = (1.0 + s) ** (-2)
    phi2 = 2.0 * (1.0 + s) ** 2 / s
    u_x0 = powr(s, c - a - b - 1) / powr(1.0 + s, c - 2)
    return x0, phi_x0, phi2, u_x0


def recessive_asym(t: ParamTriple, z: float, n: int):
    """Leading behaviour (relative accuracy O(1/n)) of the recessive
    solution: 2 sqrt(pi) (2 sqrt(1-z))^(c-a-b-1/2)
    / (n^(c-a-b+1/2) (1+sqrt(1-z))^(n+c-1))."""
    a, b, c = t
    z = float(z)
    s = math.sqrt(1.0 - z)
    e = c - a - b
    return (
        2.0
        * math.sqrt(math.pi)
        * powr(2.0 * s, e - 0.5)
        / (powr(float(n), e + 0.5) * powr(1.0 + s, n + c - 1))
    )


def _sine_pair(t: ParamTriple):
    a, b, c = t
    sca, scb = sinpi(c - a), sinpi(c - b)
    if abs(sca) < SINE_TOL or abs(scb) < SINE_TOL:
        raise PoleAtParameter(f"sin pi(c-a) or sin pi(c-b) vanishes at (a,b;c)={tuple(t)}")
    return sca, scb


def dominant_asym_z_pos(t: ParamTriple, z: float, n: int):
    """Leading behaviour of the dominant solution at 1, for z in (0, 1)."""
    a, b, c = t
    z = float(z)
    if not 0.0 < z < 1.0:
        raise ValueError(f"need z in (0,1), got {z}")
    sca, scb = _sine_pair(t)
    s = math.sqrt(1.0 - z)
    e = c - a - b
    return (
        math.sqrt(math.pi)
        * sinpi(c)
        / (sca * scb)
        * powr(2.0 * s, e - 0.5)
        / powr(float(n), e + 0.5)
        * powr((1.0 + s) / z, n + c - 1)
    )


def dominant_asym_z_neg(t: ParamTriple, z: float, n: int):
    """Leading behaviour of the dominant solution at infinity, z < 0;
    carries the parity factor (-1)^n."""
    a, b, c = t
    z = float(z)
    if z >= 0.0:
        raise ValueError(f"need z < 0, got {z}")
    sca, scb = _sine_pair(t)
    s = math.sqrt(1.0 - z)
    base = (1.0 + s) / (-z)
    if abs(base - 1.0) < 1e-9:
        log.warning(
            "dominant growth base (1+sqrt(1-z))/(-z) is 1 at z=%s; "
            "decay of the recessive-to-dominant ratio is then purely "
            "driven by the recessive side",
            z,
        )
    e = c - a - b
    return (
        (-1.0) ** (n % 2)
        * math.sqrt(math.pi)
        / (sca * scb)
        * powr(2.0 * s, e - 0.5)
        / powr(float(n), e + 0.5)
        * powr(base, n + c - 1)
    )


class CasKind(enum.Enum):
    OMEGA_1 = "omega@1"      # Casoratian of recessive with the solution at 1
    OMEGA_INF = "omega@inf"  # ... with the solution at infinity
    WRONSKIAN = "wronskian"  # differential Wronskian of the pair at 0


def casoratian_closed(t: ParamTriple, z: float, which: CasKind):
    """Closed forms of the two Casoratians and the Wronskian."""
    a, b, c = t
    z = float(z)
    sca, scb = _sine_pair(t)
    ga = real_gamma(float(a))
    gb = real_gamma(float(b))
    gca = real_gamma(float(c - a))
    if which is CasKind.WRONSKIAN:
        if not 0.0 < z < 1.0:
            raise ValueError("Wronskian closed form is used for z in (0,1)")
        gcb = real_gamma(float(c - b))
        return (
            math.pi
            * sinpi(c)
            / (sca * scb)
            * ga
            * gb
            / (gca * gcb)
            * powr(z, -c)
            * powr(1.0 - z, c - a - b - 1)
        )
    gcb1 = real_gamma(float(c - b + 1))
    if which is CasKind.OMEGA_1:
        if not 0.0 < z < 1.0:
            raise ValueError("the solution at 1 needs z in (0,1)")
        return (
            math.pi
            * sinpi(c)
            / (sca * scb)
            * ga
            * gb
            / (gca * gcb1)
            * powr(z, -c)
            * powr(1.0 - z, c - a - b)
        )
    if which is CasKind.OMEGA_INF:
        if z >= 0.0:
            raise ValueError("the solution at infinity needs z < 0")
        return (
            -math.pi
            / (sca * scb)
            * ga
            * gb
            / (gca * gcb1)
            * powr(-z, -c)
            * powr(1.0 - z, c - a - b)
        )
    raise ValueError(f"unknown kind {which!r}")


@dataclass(frozen=True)
class ErrorAsymptote:
    """n-independent data of the truncation-error prediction
    constant * w^n (sign of w^n alternates when z < 0)."""

    constant: float
    w: float
    power_offset: float  # the c+1 appearing inside the constant via w^(c+1) z^(-c)
    parity: int          # -1 when w < 0 (alternating error), else +1

    def value(self, n: int):
        """constant * w^n as an mpf (safe for w^n far below float range)."""
        if self.w == 0.0:
            return mp.mpf(0)
        sign = 1.0 if self.w > 0 else (-1.0) ** (n % 2)
        mag = mp.e ** (mp.log(abs(self.w)) * n + math.log(abs(self.constant)))
        return mag * sign * math.copysign(1.0, self.constant)


def _gamma_ratio_log(t: ParamTriple):
    """log magnitude and sign of
    Gamma(c) Gamma(c+1) / (Gamma(a+1) Gamma(b) Gamma(c-a) Gamma(c-b+1))."""
    a, b, c = (float(x.real if isinstance(x, complex) else x) for x in t)
    num = log_abs_gamma(c) + log_abs_gamma(c + 1)
    den = (
        log_abs_gamma(a + 1)
        + log_abs_gamma(b)
        + log_abs_gamma(c - a)
        + log_abs_gamma(c - b + 1)
    )
    sgn = (
        gamma_sign(c)
        * gamma_sign(c + 1)
        * gamma_sign(a + 1)
        * gamma_sign(b)
        * gamma_sign(c - a)
        * gamma_sign(c - b + 1)
    )
    return num - den, sgn


def error_asymptote_form(t: ParamTriple, z: float, ctx: EvalContext = DEFAULT_CTX) -> ErrorAsymptote:
    """Assemble the constant of the truncation-error prediction."""
    if not check_gcf_admissible(t):
        raise PoleAtParameter(f"inadmissible parameters {tuple(t)}")
    a, b, c = (float(x.real if isinstance(x, complex) else x) for x in t)
    z = float(z)
    if z == 0.0:
        return ErrorAsymptote(0.0, 0.0, c + 1, 1)
    f = hyp2f1(t, z, ctx)
    if abs(f) < 1e-8:
        raise ZeroTarget(f"|F(a,b;c;z)| = {abs(f):.3e} below 1e-8")
    lg, sgn = _gamma_ratio_log(t)
    const = (
        2.0
        * math.pi
        / f**2
        * sgn
        * math.exp(lg)
        * z
        * powr(1.0 - z, c - a - b)
        / powr(1.0 + math.sqrt(1.0 - z), 2.0 * (c + 1))
    )
    w = dilation(z)
    return ErrorAsymptote(const, w, c + 1, 1 if w >= 0 else -1)


def error_asymptote(t: ParamTriple, z: float, n: int, ctx: EvalContext = DEFAULT_CTX):
    """Predicted E_n (mpf); exact 0 at z = 0."""
    return error_asymptote_form(t, z, ctx).value(n)


def error_asymptote_star(b, c, z: float, n: int):
    """Predicted E*_n for the a->0, c->c-1 specialization (mpf)."""
    if not check_star_admissible(b, c):
        raise PoleAtParameter(f"inadmissible (b; c)=({b}, {c})")
    b = float(b.real if isinstance(b, complex) else b)
    c = float(c.real if isinstance(c, complex) else c)
    z = float(z)
    if z == 0.0:
        return mp.mpf(0)
    lg = log_abs_gamma(c) - log_abs_gamma(b) - log_abs_gamma(c - b)
    sgn = gamma_sign(c) * gamma_sign(b) * gamma_sign(c - b)
    const = (
        2.0
        * math.pi
        * sgn
        * math.exp(lg)
        * z
        * powr(1.0 - z, c - b - 1)
        / powr(1.0 + math.sqrt(1.0 - z), 2.0 * c)
    )
    return ErrorAsymptote(const, dilation(z), c, 1 if z > 0 else -1).value(n)


@dataclass(frozen=True)
class ErrorEstimateParts:
    """Pieces of the recessive/dominant assembly of the error estimate."""

    h_n: float          # recessive-to-dominant ratio at shifted index
    omega0: float       # Casoratian at index 0
    leading: float      # (c/a) * omega0 * h_n / f(0)^2  -- the error prediction
    correction: float   # g(0) * h_n / f(0) -- relative size of the next order


def error_estimate_components(
    t: ParamTriple, z: float, n: int, ctx: EvalContext = DEFAULT_CTX
) -> ErrorEstimateParts:
    """Evaluate the error estimate piece by piece (float range: moderate n).

    The dominant family is chosen by the sign of z.  `leading` agrees with
    error_asymptote to rounding; `correction` decays like w^(n+c+1).
    """
    a, b, c = (float(x.real if isinstance(x, complex) else x) for x in t)
    z = float(z)
    if z == 0.0:
        return ErrorEstimateParts(0.0, 0.0, 0.0, 0.0)
    w = dilation(z)
    sca, scb = _sine_pair(t)
    f0 = hgf(t, z, ctx)
    if abs(f0) < 1e-12:
        raise ZeroTarget("recessive solution vanishes at index 0")
    if z > 0.0:
        sc = sinpi(c)
        if abs(sc) < SINE_TOL:
            raise PoleAtParameter("integer c degenerates the dominant solution at 1")
        h_n = 2.0 * sca * scb / sc * powr(w, n + c + 1)
        omega0 = casoratian_closed(t, z, CasKind.OMEGA_1)
        g0 = frobenius(FrobeniusKind.Y1_1, t, z, ctx)
    else:
        h_n = 2.0 * sca * scb * powr(-w, c + 1) * w**n
        omega0 = casoratian_closed(t, z, CasKind.OMEGA_INF)
        g0 = frobenius(FrobeniusKind.Y1_INF, t, z, ctx)
    leading = (c / a) * omega0 * h_n / f0**2
    correction = g0 * h_n / f0
    return ErrorEstimateParts(h_n, omega0, leading, correction)


def borwein_bound(b, c, z: float, n: int) -> float:
    """Classical explicit majorant for |E*_n| in the regime
    2 <= b, b+1 <= c <= 2b, -1 <= z < 0, with m = floor(n/2)."""
    b = float(b.real if isinstance(b, complex) else b)
    c = float(c.real if isinstance(c, complex) else c)
    z = float(z)
    if not (b >= 2.0 and b + 1.0 <= c <= 2.0 * b and -1.0 <= z < 0.0):
        raise OutOfRegime(
            f"(b, c, z)=({b}, {c}, {z}) outside 2<=b, b+1<=c<=2b, -1<=z<0"
        )
    m = n // 2
    lg = (
        log_abs_gamma(m + 1.0)
        + math.log(m + b)
        + log_abs_gamma(m + c - b)
        + log_abs_gamma(b)
        + log_abs_gamma(c)
        - log_abs_gamma(m + b)
        - log_abs_gamma(m + c)
        - math.log(b)
        - log_abs_gamma(c - b)
    )
    brace = 2.0 * b / ((c - 2.0) * (1.0 - 2.0 / z) + (2.0 * b - c))
    return math.exp(lg) * brace**n
