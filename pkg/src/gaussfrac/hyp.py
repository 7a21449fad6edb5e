"""Gauss hypergeometric evaluation and the rescaled Frobenius solution basis.

Two closely related series are provided:

* ``hyp2f1`` -- the classical F(a,b;c;z) normalised to F(...;0) = 1;
* ``hgf``    -- the gamma-rescaled sum
  sum_k Gamma(a+k)Gamma(b+k)/(Gamma(1+k)Gamma(c+k)) z^k
  = Gamma(a)Gamma(b)/Gamma(c) * F(a,b;c;z),
  which stays finite when c is a nonpositive integer (the series is then
  started past the vanishing reciprocal-gamma terms).

Evaluation strategy: direct power series for arguments in [0, 3/4]; the
linear fractional map z -> z/(z-1) for negative arguments (which lands in
(0, 3/4] exactly when z >= -3); arguments in (3/4, 1) are rejected at this
level and must be reached through connection formulas.

On top of these sit the six rescaled Frobenius solutions of the
hypergeometric equation (at 0, 1 and infinity), whose connection
coefficients are periodic under integer shifts of (a, b; c), and the
three-term contiguous relations that all six solutions satisfy
simultaneously.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence, PoleAtParameter
from .gammafn import (
    gamma_sign,
    is_nonpositive_int,
    log_abs_gamma,
    nearest_int_dist,
    powr,
    real_gamma,
    sinpi,
)
from .params import K, ONE, P, ParamTriple, shift

#: Largest argument accepted by the raw power series.
SERIES_CUT = 0.75

#: Sine factors smaller than this trigger PoleAtParameter instead of a
#: huge, meaningless value.
SINE_TOL = 1e-9


@dataclass(frozen=True)
class EvalContext:
    """Knobs for series evaluation.

    working_precision is in decimal digits and only matters for routines
    that escalate to arbitrary precision; the double-precision series here
    use tail_tolerance and max_terms.
    """

    working_precision: int = 30
    tail_tolerance: float = 1e-16
    max_terms: int = 4096

    def __post_init__(self):
        if self.working_precision < 16:
            raise ValueError("working_precision must be >= 16 digits")
        if self.tail_tolerance <= 0.0:
            raise ValueError("tail_tolerance must be positive")
        if self.max_terms < 64:
            raise ValueError("max_terms must be >= 64")


DEFAULT_CTX = EvalContext()


class FrobeniusKind(enum.Enum):
    """The six rescaled local solutions (two per singular point)."""

    Y1_0 = "y1@0"
    Y2_0 = "y2@0"
    Y1_1 = "y1@1"
    Y2_1 = "y2@1"
    Y1_INF = "y1@inf"
    Y2_INF = "y2@inf"


class ContiguousRelation(enum.Enum):
    """Which three-term identity contiguous_residual checks."""

    STEP_A = "a"        # y(t) = (c/a) y(t+K) + ((a-c)z/a) y(t+P)
    STEP_B = "b"        # y(t+K) = ((c+1)/b) y(t+P) + ((b-c-1)z/b) y(t+P+K)
    STEP_DOWN = "down"  # y(t+K) = (a/(c-b)) y(t) - ((1-z)/(c-b)) y(t+ONE)


def _as_scalar(x):
    """Collapse complex-typed reals to float."""
    if isinstance(x, complex) and x.imag == 0.0:
        return x.real
    return x


def _sort_upper(a, b):
    """Deterministic ordering of the two upper parameters, so that results
    are bit-identical under their exchange."""
    ka = (a.real, a.imag) if isinstance(a, complex) else (float(a), 0.0)
    kb = (b.real, b.imag) if isinstance(b, complex) else (float(b), 0.0)
    return (a, b) if ka <= kb else (b, a)


def _series_sum(t0, a, b, c, x, ctx: EvalContext, k0: int = 0):
    """sum of t_k for k >= k0 where t_{k0} = t0 and
    t_{k+1} = t_k (a+k)(b+k) / ((1+k)(c+k)) x.

    Stops once five consecutive term ratios sit below a bound q < 0.95 and
    the geometric tail estimate |t| q/(1-q) (inflated 10%) drops under
    tail_tolerance * |sum|.  Terminating series (a zero factor) stop exactly.
    """
    term = t0
    total = t0
    biggest = abs(t0)
    steady = 0
    k = k0
    for _ in range(ctx.max_terms):
        nxt = term * ((a + k) * (b + k)) / ((1 + k) * (c + k)) * x
        if nxt == 0:
            return total  # terminating (polynomial) case
        total += nxt
        mag, prev = abs(nxt), abs(term)
        biggest = max(biggest, mag)
        ratio = mag / prev if prev > 0.0 else 1.0
        steady = steady + 1 if ratio < 0.95 else 0
        if steady >= 5:
            tail = 1.1 * mag * ratio / (1.0 - ratio)
            if tail <= ctx.tail_tolerance * max(abs(total), 1e-6 * biggest):
                return total
        term = nxt
        k += 1
    raise NonConvergence(f"series did not certify convergence within {ctx.max_terms} terms (x={x})")


def _check_lower_parameter(c):
    if is_nonpositive_int(c):
        raise PoleAtParameter(f"lower parameter c={c} is a nonpositive integer")


def hyp2f1(t: ParamTriple, z: float, ctx: EvalContext = DEFAULT_CTX):
    """F(a, b; c; z) for real z < 1.

    Arguments in (3/4, 1) and below -3 are out of the raw-series domain
    and raise DomainError; larger structures (connection formulas) must be
    used there.
    """
    a, b, c = t
    _check_lower_parameter(c)
    z = float(z)
    if z >= 1.0:
        raise DomainError(f"argument z={z} is on or beyond the cut [1, inf)")
    if 0.0 <= z <= SERIES_CUT:
        return _as_scalar(_series_sum(1.0, a, b, c, z, ctx))
    if z > SERIES_CUT:
        raise DomainError(
            f"z={z} lies in ({SERIES_CUT}, 1); evaluate through connection formulas"
        )
    # z < 0: map to zeta = z/(z-1) in (0, 1), F = (1-z)^(-a) F(a, c-b; c; zeta)
    zeta = z / (z - 1.0)
    if zeta > SERIES_CUT:
        raise DomainError(
            f"z={z} < -3 maps to argument {zeta} > {SERIES_CUT}; out of the series domain"
        )
    lo, hi = _sort_upper(a, b)
    pref = powr(1.0 - z, -lo)
    return _as_scalar(pref * _series_sum(1.0, lo, c - hi, c, zeta, ctx))


def _gamma_prefactor(a, b, c):
    """Gamma(a) Gamma(b) / Gamma(c) for real non-pole arguments."""
    for x, name in ((a, "a"), (b, "b")):
        if is_nonpositive_int(x):
            raise PoleAtParameter(f"upper parameter {name}={x} is a nonpositive integer")
    _check_lower_parameter(c)
    lg = log_abs_gamma(a.real if isinstance(a, complex) else a)
    lg += log_abs_gamma(b.real if isinstance(b, complex) else b)
    lg -= log_abs_gamma(c.real if isinstance(c, complex) else c)
    sgn = gamma_sign(a.real if isinstance(a, complex) else a)
    sgn *= gamma_sign(b.real if isinstance(b, complex) else b)
    sgn *= gamma_sign(c.real if isinstance(c, complex) else c)
    return sgn * math.exp(lg)


def hgf(t: ParamTriple, z: float, ctx: EvalContext = DEFAULT_CTX):
    """Gamma-rescaled series Gamma(a)Gamma(b)/Gamma(c) * F(a,b;c;z).

    Unlike hyp2f1 this stays finite for c in Z_{<=0}: the terms with
    1/Gamma(c+k) at a pole vanish and summation starts at k = 1-c.
    """
    a, b, c = t
    z = float(z)
    c_re = c.real if isinstance(c, complex) else float(c)
    c_int = nearest_int_dist(c) <= 1e-12 and round(c_re) <= 0
    if not c_int and is_nonpositive_int(c, 1e-6):
        # close to a pole of 1/Gamma(c+k) crossings: ill-conditioned zone
        raise PoleAtParameter(f"c={c} is dangerously close to a nonpositive integer")
    if not c_int:
        return _as_scalar(_gamma_prefactor(a, b, c) * hyp2f1(t, z, ctx))

    # Regularized branch: c is exactly a nonpositive integer.
    for x, name in ((a, "a"), (b, "b")):
        if is_nonpositive_int(x):
            raise PoleAtParameter(f"upper parameter {name}={x} is a nonpositive integer")
    if z < 0.0:
        raise PoleAtParameter(
            f"c={c} in Z_(<=0) combined with negative argument is not supported"
        )
    if z > SERIES_CUT:
        raise DomainError(f"z={z} beyond the series domain [0, {SERIES_CUT}]")
    k0 = 1 - int(round(c_re))
    co = int(round(c_re))
    for x, name in ((a, "a"), (b, "b")):
        xr = x.real if isinstance(x, complex) else float(x)
        if nearest_int_dist(x) <= 1e-12 and round(xr) + k0 <= 0:
            raise PoleAtParameter(f"{name}={x} leaves a gamma pole in the regularized series")

    def lg_signed(x):
        xr = x.real if isinstance(x, complex) else float(x)
        return log_abs_gamma(xr), gamma_sign(xr)

    la, sa = lg_signed(a + k0)
    lb, sb = lg_signed(b + k0)
    t0 = sa * sb * math.exp(la + lb - log_abs_gamma(1.0 + k0)) * z**k0
    if t0 == 0.0:
        return 0.0
    return _as_scalar(_series_sum(t0, a, b, co, z, ctx, k0=k0))


def _real_of(x) -> float:
    if isinstance(x, complex):
        if x.imag != 0.0:
            raise DomainError("complex gamma arguments are outside the verified region")
        return x.real
    return float(x)


def chi(t: ParamTriple):
    """Connection factor pi sin(pi c) / (sin pi(c-a) sin pi(c-b)) / (Gamma(c-a) Gamma(c-b))."""
    a, b, c = t
    sca, scb = sinpi(c - a), sinpi(c - b)
    if abs(sca) < SINE_TOL or abs(scb) < SINE_TOL:
        raise PoleAtParameter(f"c-a={c - a} or c-b={c - b} is (nearly) an integer")
    ga = real_gamma(_real_of(c - a))
    gb = real_gamma(_real_of(c - b))
    return _as_scalar(math.pi * sinpi(c) / (sca * scb * ga * gb))


def _inf_prefactor(t: ParamTriple):
    """pi / (sin pi(c-a) sin pi(c-b) Gamma(c-a) Gamma(c-b)) -- the common
    scale of both solutions at infinity (equals chi / sin(pi c))."""
    a, b, c = t
    sca, scb = sinpi(c - a), sinpi(c - b)
    if abs(sca) < SINE_TOL or abs(scb) < SINE_TOL:
        raise PoleAtParameter(f"c-a={c - a} or c-b={c - b} is (nearly) an integer")
    return math.pi / (sca * scb * real_gamma(_real_of(c - a)) * real_gamma(_real_of(c - b)))


def frobenius(kind: FrobeniusKind, t: ParamTriple, z: float, ctx: EvalContext = DEFAULT_CTX):
    """Evaluate one rescaled Frobenius solution.

    Domains: the families at 0 and 1 want z in (0, 1) (the 0-family also
    accepts z < 0 where its series machinery reaches); the family at
    infinity wants z <= -1/3, evaluated through its Pfaff form with
    argument 1/(1-z).
    """
    a, b, c = t
    z = float(z)
    if kind is FrobeniusKind.Y1_0:
        return hgf(t, z, ctx)
    if kind is FrobeniusKind.Y2_0:
        if not 0.0 < z < 1.0:
            raise DomainError("the second solution at 0 needs z in (0,1) for a real power z^(1-c)")
        return _as_scalar(powr(z, 1 - c) * hgf(ParamTriple(a - c + 1, b - c + 1, 2 - c), z, ctx))
    if kind in (FrobeniusKind.Y1_1, FrobeniusKind.Y2_1):
        if not 0.0 < z < 1.0:
            raise DomainError("solutions at 1 need z in (0, 1)")
        factor = chi(t)
        if kind is FrobeniusKind.Y1_1:
            return _as_scalar(factor * hgf(ParamTriple(a, b, a + b - c + 1), 1.0 - z, ctx))
        return _as_scalar(
            factor
            * powr(1.0 - z, c - a - b)
            * hgf(ParamTriple(c - a, c - b, c - a - b + 1), 1.0 - z, ctx)
        )
    if kind in (FrobeniusKind.Y1_INF, FrobeniusKind.Y2_INF):
        if z >= 0.0:
            raise DomainError("solutions at infinity are evaluated for z < 0 only")
        u = 1.0 / (1.0 - z)
        if u > SERIES_CUT:
            raise DomainError(f"z={z} in (-1/3, 0) maps to argument {u} > {SERIES_CUT}")
        pref = _inf_prefactor(t)
        if kind is FrobeniusKind.Y1_INF:
            return _as_scalar(pref * powr(1.0 - z, -a) * hgf(ParamTriple(a, c - b, a - b + 1), u, ctx))
        return _as_scalar(pref * powr(1.0 - z, -b) * hgf(ParamTriple(b, c - a, b - a + 1), u, ctx))
    raise ValueError(f"unknown kind {kind!r}")


def connection_coefficients(t: ParamTriple) -> dict:
    """The six scalar coefficients expressing the solutions at 1 and
    infinity through the two solutions at 0.  All are invariant under
    integer shifts of (a, b; c)."""
    a, b, c = t
    sa, sb, sc = sinpi(a), sinpi(b), sinpi(c)
    sca, scb = sinpi(c - a), sinpi(c - b)
    if min(abs(sc), abs(sca), abs(scb)) < SINE_TOL:
        raise PoleAtParameter("integer c, c-a or c-b degenerates the connection coefficients")
    return {
        "at1_first": (1.0, -1.0),
        "at1_second": (_as_scalar(sa * sb / (sca * scb)), -1.0),
        "atinf_first": (_as_scalar(sb / (sc * scb)), None),
        "atinf_second": (_as_scalar(sa / (sc * sca)), None),
    }


def connection_residuals(t: ParamTriple, z: float, ctx: EvalContext = DEFAULT_CTX):
    """Absolute residuals of the four connection formulas.

    The two formulas at the point 1 are checked at z itself (z in (0,1)).
    The solutions at infinity only converge for negative arguments, so
    those two formulas are checked at -z; there the second solution at 0
    carries the continued power z^(1-c) from the upper half plane, which
    combines with the e^(i pi c) connection coefficient into the real value
    -(-z)^(1-c)/sin(pi c).
    """
    a, b, c = t
    z = float(z)
    if not 0.0 < z < 1.0:
        raise DomainError("connection residuals are verified for z in (0, 1)")
    sc = sinpi(c)
    if abs(sc) < SINE_TOL:
        raise PoleAtParameter(f"c={c} is (nearly) an integer; connection formulas degenerate")
    coeff = connection_coefficients(t)

    y10 = frobenius(FrobeniusKind.Y1_0, t, z, ctx)
    y20 = frobenius(FrobeniusKind.Y2_0, t, z, ctx)
    y11 = frobenius(FrobeniusKind.Y1_1, t, z, ctx)
    y21 = frobenius(FrobeniusKind.Y2_1, t, z, ctx)
    r_at1_first = abs(y11 - (y10 - y20))
    r_at1_second = abs(y21 - (coeff["at1_second"][0] * y10 - y20))

    zn = -z
    y10n = hgf(t, zn, ctx)
    f2n = hgf(ParamTriple(a - c + 1, b - c + 1, 2 - c), zn, ctx)
    scb, sca = sinpi(c - b), sinpi(c - a)
    y1i = frobenius(FrobeniusKind.Y1_INF, t, zn, ctx)
    y2i = frobenius(FrobeniusKind.Y2_INF, t, zn, ctx)
    second_piece = powr(-zn, 1 - c) * f2n / sc
    r_atinf_first = abs(y1i - (sinpi(b) / (sc * scb) * y10n - second_piece))
    r_atinf_second = abs(y2i - (sinpi(a) / (sc * sca) * y10n - second_piece))

    return (r_at1_first, r_at1_second, r_atinf_first, r_atinf_second)


def contiguous_residual(
    t: ParamTriple,
    z: float,
    kind: FrobeniusKind,
    which: ContiguousRelation,
    ctx: EvalContext = DEFAULT_CTX,
):
    """Absolute residual of one three-term contiguous relation for one
    rescaled solution; near zero for every kind (simultaneousness)."""
    a, b, c = t
    y = lambda tt: frobenius(kind, tt, z, ctx)  # noqa: E731 - local shorthand
    if which is ContiguousRelation.STEP_A:
        lhs = y(t)
        rhs = (c / a) * y(shift(t, K)) + ((a - c) * z / a) * y(shift(t, P))
    elif which is ContiguousRelation.STEP_B:
        lhs = y(shift(t, K))
        rhs = ((c + 1) / b) * y(shift(t, P)) + ((b - c - 1) * z / b) * y(shift(shift(t, P), K))
    elif which is ContiguousRelation.STEP_DOWN:
        if abs(c - b) < 1e-12:
            raise PoleAtParameter("c = b degenerates the downward relation")
        lhs = y(shift(t, K))
        rhs = (a / (c - b)) * y(t) - ((1.0 - z) / (c - b)) * y(shift(t, ONE))
    else:
        raise ValueError(f"unknown relation {which!r}")
    return abs(lhs - rhs)
