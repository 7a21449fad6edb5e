"""Discrete Laplace method for gamma-factor sums with a large parameter.

The object of study is

    g(n) = sum_{k=ceil(r0 n)}^{ceil(r1 n)-1} G(k; n) z^k,
    G(k; n) = prod_I Gamma(sigma_i k + lambda_i n + alpha_i)
            / prod_J Gamma(tau_j k + mu_j n + beta_j).

Writing k ~ x n, the term magnitude is governed by a multiplicative phase
Phi(x) and an amplitude u(x); interior nondegenerate maxima of Phi yield

    g(n) = n^(gamma+1/2) (n/e)^(nu n) Phi_max^n {C + O(n^(-1/2))},
    C = sqrt(2 pi) sum_{x0} u(x0) / sqrt(phi''(x0)),

and any Psi > Phi_max yields a tail bound of shape
(n/e)^(nu n) Psi^n (delta0^(-1) + delta1^(-1)) whose constants are not
constructed here (the delta's quantify how far the offsets alpha sit from
the gamma poles pulled in at the interval ends).

`brute_force` is the independent summation oracle; it runs in mpmath
arithmetic, which absorbs the (n/e)^(nu n) magnitudes that overflow
doubles, and also accepts descriptors that violate positivity or have
z < 0 (needed as the reference path for the decomposition module).
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import (
    BoundaryMaximum,
    DegenerateMaximum,
    DomainError,
    NonConvergence,
    PoleAtParameter,
    PsiTooSmall,
)

#: curvature below this at a maximum is treated as degenerate
CURVATURE_TOL = 1e-10

#: grid resolution of the maxima scan
GRID_POINTS = 4096


class Side(enum.Enum):
    NUMERATOR = "numerator"
    DENOMINATOR = "denominator"


@dataclass(frozen=True)
class GammaFactor:
    """One factor Gamma(sigma k + lam n + alpha) on the given side."""

    sigma: float
    lam: float
    alpha: complex
    side: Side = Side.NUMERATOR

    def __post_init__(self):
        if self.sigma == 0:
            raise ValueError("sigma must be nonzero")

    def line(self, x):
        """The linear form sigma*x + lam driving this factor at k ~ x n."""
        return self.sigma * x + self.lam


@dataclass(frozen=True)
class SumDescriptor:
    """Index data of a gamma-factor sum.

    r1 may be math.inf.  z must be a nonzero real; z < 0 descriptors are
    accepted (they arise before decomposition and as reference paths) but
    fail validation against the positive-variable assumptions.
    """

    factors: tuple
    r0: float
    r1: float
    z: float

    def __post_init__(self):
        if isinstance(self.z, complex):
            raise DomainError("non-real z is rejected; split even/odd parts instead")
        if self.z == 0:
            raise DomainError("z must be nonzero")
        if not self.r0 < self.r1:
            raise ValueError(f"need r0 < r1, got [{self.r0}, {self.r1}]")
        if self.r0 < 0:
            raise ValueError("r0 must be >= 0")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def numerator_factors(self):
        return tuple(f for f in self.factors if f.side is Side.NUMERATOR)

    @property
    def denominator_factors(self):
        return tuple(f for f in self.factors if f.side is Side.DENOMINATOR)

    def k_range(self, n: int):
        """[k_first, k_last] of the sum at parameter n (k_last may be inf)."""
        lo = math.ceil(self.r0 * n)
        hi = math.inf if math.isinf(self.r1) else math.ceil(self.r1 * n) - 1
        return lo, hi


@dataclass(frozen=True)
class DlmInvariants:
    rho: float
    nu: float
    gamma: complex


@dataclass(frozen=True)
class ValidationIssue:
    item: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    balanced: bool
    positive: bool
    delta0: float
    delta1: float
    convergence_case: str  # "finite", "i", "ii", "iii" or "fail"
    issues: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.issues


@dataclass(frozen=True)
class MaximumReport:
    phi_max: float
    log_phi_max: float
    maxima: tuple  # of (x0, phi2, u(x0))
    boundary_values: tuple  # (Phi(r0), Phi(r1))


@dataclass(frozen=True)
class AsymptoticForm:
    """Prediction g(n) ~ constant * n^algebraic_exponent * (n/e)^(stirling_exponent*n)
    * geometric_base^n."""

    constant: complex
    algebraic_exponent: complex  # gamma + 1/2
    stirling_exponent: float     # nu
    geometric_base: float        # Phi_max
    log_geometric_base: float

    def value(self, n: int):
        """Evaluate at n as an mpf/mpc (exponent ranges exceed doubles)."""
        ln = mp.log(n)
        expo = mp.mpf(self.stirling_exponent) * n * (ln - 1) + n * mp.mpf(self.log_geometric_base)
        if isinstance(self.algebraic_exponent, complex) and self.algebraic_exponent.imag != 0:
            alg = mp.mpc(self.algebraic_exponent) * ln
        else:
            alg = mp.mpf(
                self.algebraic_exponent.real
                if isinstance(self.algebraic_exponent, complex)
                else self.algebraic_exponent
            ) * ln
        base = mp.e ** (expo + alg)
        if isinstance(self.constant, complex) and self.constant.imag != 0:
            return mp.mpc(self.constant) * base
        return mp.mpf(
            self.constant.real if isinstance(self.constant, complex) else self.constant
        ) * base


@dataclass(frozen=True)
class TailBoundShape:
    """Functional part (n/e)^(nu n) Psi^n (delta0(n)^-1 + delta1(n)^-1) of the
    crude tail bound; the multiplicative constant is existential."""

    nu: float
    psi: float
    descriptor: SumDescriptor

    def value(self, n: int):
        d0 = delta_generic(self.descriptor, 0, n)
        d1 = delta_generic(self.descriptor, 1, n)
        return mp.e ** (mp.mpf(self.nu) * n * (mp.log(n) - 1) + n * mp.log(self.psi)) * (
            1.0 / d0 + 1.0 / d1
        )


# -- invariants and validation ------------------------------------------------


def invariants(d: SumDescriptor) -> DlmInvariants:
    """(rho, nu, gamma): geometric term-ratio limit, Stirling exponent and
    algebraic offset of the sum."""
    rho = float(d.z)
    nu = 0.0
    gamma = 0.0 + 0.0j
    n_num = n_den = 0
    for f in d.factors:
        s = abs(f.sigma) ** f.sigma
        if f.side is Side.NUMERATOR:
            rho *= s
            nu += f.lam
            gamma += complex(f.alpha)
            n_num += 1
        else:
            rho /= s
            nu -= f.lam
            gamma -= complex(f.alpha)
            n_den += 1
    gamma += (n_den - n_num) / 2.0
    if gamma.imag == 0.0:
        gamma = gamma.real
    return DlmInvariants(rho, nu, gamma)


def _dist_to_pole_set(alpha: complex, sigma_abs: float, star: int) -> float:
    """Distance from alpha to {-j - |sigma| l : j >= 0, l >= star}."""
    re, im = complex(alpha).real, complex(alpha).imag
    best = math.inf
    l = star
    while True:
        base = -sigma_abs * l
        # j >= 0 bringing base - j nearest to re
        j_near = max(0, round(base - re))
        for j in (j_near - 1, j_near, j_near + 1):
            if j >= 0:
                best = min(best, math.hypot(re - (base - j), im))
        if base - re < -best:  # every later l only moves the set further down
            return best
        l += 1


def delta_generic(d: SumDescriptor, star: int, n: int = 1) -> float:
    """min{1, prod over boundary-degenerate numerator factors of the
    distance of the (fractionally shifted) offset from the pole set}."""
    r_star = d.r0 if star == 0 else d.r1
    if math.isinf(r_star):
        return 1.0
    prod = 1.0
    frac_shift = math.ceil(r_star * n) - r_star * n
    for f in d.numerator_factors:
        if abs(f.line(r_star)) < 1e-12:
            alpha_shifted = complex(f.alpha) + f.sigma * frac_shift
            prod *= _dist_to_pole_set(alpha_shifted, abs(f.sigma), star)
    return min(1.0, prod)


def validate(d: SumDescriptor, n: int = 1) -> ValidationReport:
    """Check balancedness, positivity, genericness and (when r1 = inf)
    convergence.  delta values are evaluated at the given n; they are
    n-independent whenever the corresponding endpoint is an integer."""
    issues = []
    if d.z < 0:
        issues.append(ValidationIssue("variable", f"z={d.z} must be positive; decompose even/odd parts first"))
    s_num = sum(f.sigma for f in d.numerator_factors)
    s_den = sum(f.sigma for f in d.denominator_factors)
    balanced = abs(s_num - s_den) < 1e-12
    if not balanced:
        issues.append(
            ValidationIssue("balancedness", f"sum of numerator slopes {s_num} != denominator {s_den}")
        )

    positive = True
    for f in d.factors:
        lo = f.line(d.r0)
        if math.isinf(d.r1):
            hi = math.inf if f.sigma > 0 else -math.inf
        else:
            hi = f.line(d.r1)
        if lo < -1e-12 or hi < -1e-12:
            positive = False
            issues.append(
                ValidationIssue(
                    "positivity",
                    f"linear form {f.sigma}*x+{f.lam} ({f.side.value}) is negative on "
                    f"({d.r0}, {d.r1}); split the sum at its root and reflect "
                    "(see the decomposition module)",
                )
            )

    inv = invariants(d)
    d0 = delta_generic(d, 0, n)
    d1 = delta_generic(d, 1, n)
    if d0 <= 0.0:
        issues.append(ValidationIssue("genericness", f"delta0 = {d0}; offsets hit the pole set"))
    if d1 <= 0.0:
        issues.append(ValidationIssue("genericness", f"delta1 = {d1}; offsets hit the pole set"))

    if not math.isinf(d.r1):
        case = "finite"
    elif 0 < inv.rho < 1:
        case = "i"
    elif abs(inv.rho - 1) < 1e-12 and inv.nu < 0:
        case = "ii"
    elif abs(inv.rho - 1) < 1e-12 and inv.nu == 0 and complex(inv.gamma).real < -1:
        case = "iii"
    else:
        case = "fail"
        issues.append(
            ValidationIssue(
                "convergence",
                f"infinite range with rho={inv.rho}, nu={inv.nu}, gamma={inv.gamma} "
                "is not absolutely convergent",
            )
        )
    return ValidationReport(balanced, positive, d0, d1, case, tuple(issues))


# -- phase and amplitude -------------------------------------------------------


def _xlogx(v: float) -> float:
    return 0.0 if v == 0.0 else v * math.log(v)


def log_phase(d: SumDescriptor, x: float) -> float:
    """log Phi(x) = x log z + sum_I l log l - sum_J m log m (0 log 0 := 0)."""
    if d.z <= 0:
        raise DomainError("phase analysis needs z > 0")
    acc = x * math.log(d.z)
    for f in d.factors:
        v = f.line(x)
        if v < 0.0:
            raise DomainError(f"linear form {f.sigma}*x+{f.lam} negative at x={x}")
        acc += _xlogx(v) if f.side is Side.NUMERATOR else -_xlogx(v)
    return acc


def phase(d: SumDescriptor, x: float):
    """(Phi(x), u(x), phi'(x), phi''(x)) at an interior point."""
    if not d.r0 < x < d.r1:
        raise DomainError(f"x={x} outside ({d.r0}, {d.r1})")
    if d.z <= 0:
        raise DomainError("phase analysis needs z > 0")
    dlog = -math.log(d.z)
    curv = 0.0
    ulog = 0.0 + 0.0j
    kappa = 0
    for f in d.factors:
        v = f.line(x)
        if v <= 0.0:
            raise DomainError(f"linear form {f.sigma}*x+{f.lam} not positive at x={x}")
        sgn = 1 if f.side is Side.NUMERATOR else -1
        dlog -= sgn * f.sigma * math.log(v)
        curv -= sgn * f.sigma**2 / v
        ulog += sgn * (complex(f.alpha) - 0.5) * math.log(v)
        kappa += sgn
    u = (2.0 * math.pi) ** (kappa / 2.0) * cmath.exp(ulog)
    if u.imag == 0.0:
        u = u.real
    return math.exp(log_phase(d, x)), u, dlog, curv


def _phi_prime(d: SumDescriptor, x: float) -> float:
    acc = -math.log(d.z)
    for f in d.factors:
        v = f.line(x)
        sgn = 1 if f.side is Side.NUMERATOR else -1
        acc -= sgn * f.sigma * math.log(v)
    return acc


def _phi_infinity(d: SumDescriptor, rho: float):
    """Limit value of Phi at +inf: 0 for rho < 1, the slope constant for rho = 1."""
    if rho < 1.0 - 1e-12:
        return 0.0, -math.inf
    if abs(rho - 1.0) <= 1e-12:
        acc = 0.0
        for f in d.factors:
            term = f.lam * math.log(abs(f.sigma))
            acc += term if f.side is Side.NUMERATOR else -term
        return math.exp(acc), acc
    return math.inf, math.inf


def find_maxima(d: SumDescriptor) -> MaximumReport:
    """Locate the global maxima of Phi on [r0, r1].

    Grid scan of phi' sign changes plus bisection refinement; boundary
    values are compared against the interior maxima and win => error.
    """
    report = validate(d)
    if not report.ok:
        raise DomainError("; ".join(f"{i.item}: {i.message}" for i in report.issues))
    inv = invariants(d)

    if math.isinf(d.r1):
        # expand the span until Phi has decreased for 3 consecutive cells
        span = max(4.0, 2.0 * (abs(d.r0) + 1.0))
        while span < 1e12:
            xs = np.linspace(d.r0, d.r0 + span, GRID_POINTS + 1)[1:]
            logs = np.array([log_phase(d, float(x)) for x in xs[-4:]])
            if np.all(np.diff(logs) < 0):
                break
            span *= 2.0
        else:
            raise NonConvergence("phase never started decreasing; check convergence")
        hi = d.r0 + span
    else:
        hi = d.r1
    eps = (hi - d.r0) * 1e-9
    xs = np.linspace(d.r0 + eps, hi - eps, GRID_POINTS)
    dphi = np.array([_phi_prime(d, float(x)) for x in xs])

    roots = []
    sign = np.sign(dphi)
    for i in np.nonzero(np.diff(sign) != 0)[0]:
        lo_x, hi_x = float(xs[i]), float(xs[i + 1])
        flo = dphi[i]
        for _ in range(200):
            mid = 0.5 * (lo_x + hi_x)
            fm = _phi_prime(d, mid)
            if abs(fm) < 1e-12 or hi_x - lo_x < 1e-15 * max(1.0, abs(mid)):
                break
            if (fm > 0) == (flo > 0):
                lo_x, flo = mid, fm
            else:
                hi_x = mid
        roots.append(0.5 * (lo_x + hi_x))

    interior = []
    for x0 in roots:
        _, u0, _, curv = phase(d, x0)
        interior.append((x0, curv, u0, log_phase(d, x0)))

    log_b0 = log_phase(d, d.r0)
    if math.isinf(d.r1):
        b1, log_b1 = _phi_infinity(d, inv.rho)
    else:
        log_b1 = log_phase(d, d.r1)
        b1 = math.exp(log_b1)
    boundary = (math.exp(log_b0), b1)

    peaks = [(x0, curv, u0, lg) for (x0, curv, u0, lg) in interior if curv > 0.0]
    if not peaks:
        raise BoundaryMaximum(
            "no interior maximum; the phase peaks at the boundary",
            MaximumReport(max(boundary), max(log_b0, log_b1), (), boundary),
        )
    log_best = max(lg for (_, _, _, lg) in peaks)
    tol = 1e-9 * max(1.0, abs(log_best))
    if max(log_b0, log_b1) >= log_best - tol:
        raise BoundaryMaximum(
            f"boundary phase {max(boundary):.6g} dominates interior {math.exp(log_best):.6g}",
            MaximumReport(max(boundary), max(log_b0, log_b1), tuple((x, c, u) for x, c, u, _ in peaks), boundary),
        )
    chosen = [(x, c, u) for (x, c, u, lg) in peaks if lg >= log_best - tol]
    for x0, curv, _ in chosen:
        if curv <= CURVATURE_TOL:
            raise DegenerateMaximum(f"phi''({x0}) = {curv} is not safely positive")
    return MaximumReport(math.exp(log_best), log_best, tuple(chosen), boundary)


def leading_asymptote(d: SumDescriptor) -> AsymptoticForm:
    """Leading prediction from the interior nondegenerate maxima."""
    inv = invariants(d)
    report = find_maxima(d)
    const = 0.0 + 0.0j
    for x0, curv, u0 in report.maxima:
        const += complex(u0) / math.sqrt(curv)
    const *= math.sqrt(2.0 * math.pi)
    if const.imag == 0.0:
        const = const.real
    gamma = complex(inv.gamma)
    alg = gamma + 0.5
    if alg.imag == 0.0:
        alg = alg.real
    return AsymptoticForm(const, alg, inv.nu, report.phi_max, report.log_phi_max)


def tail_bound_shape(d: SumDescriptor, psi: float) -> TailBoundShape:
    """Shape of the crude bound for any Psi above the phase maximum;
    boundary maxima are fine here."""
    report = validate(d)
    if not report.ok:
        raise DomainError("; ".join(f"{i.item}: {i.message}" for i in report.issues))
    inv = invariants(d)
    try:
        phi_max = find_maxima(d).phi_max
    except BoundaryMaximum as exc:
        phi_max = exc.report.phi_max
    if psi <= phi_max:
        raise PsiTooSmall(f"Psi={psi} must exceed the phase maximum {phi_max}")
    return TailBoundShape(inv.nu, float(psi), d)


# -- brute-force summation ------------------------------------------------------


def _term(d: SumDescriptor, k: int, n: int):
    val = mp.mpf(1)
    for f in d.factors:
        arg = f.sigma * k + f.lam * n + (
            mp.mpc(f.alpha) if complex(f.alpha).imag else mp.mpf(complex(f.alpha).real)
        )
        try:
            g = mp.gamma(arg)
        except ValueError as exc:
            raise PoleAtParameter(f"gamma pole at argument {arg} (k={k}, n={n})") from exc
        val = val * g if f.side is Side.NUMERATOR else val / g
    return val * mp.power(mp.mpf(d.z), k)


def brute_force(d: SumDescriptor, n: int, *, precision: int = 30, tail_tolerance: float = 1e-14,
                max_terms: int = 200000, extra_upper_terms: int = 0):
    """Direct summation of the gamma-factor sum at parameter n.

    Runs in mpmath arithmetic at `precision` digits.  Infinite ranges stop
    once the measured term ratio certifies a geometric tail below
    tail_tolerance relative to the partial sum.  extra_upper_terms widens
    the upper limit (used by parity splits whose exact range exceeds the
    ceil(r n) convention by a constant).

    Unlike the asymptotic machinery this evaluator does not require
    positivity or z > 0; it is the reference path for everything else.
    """
    lo, hi = d.k_range(n)
    if not math.isinf(hi):
        hi += extra_upper_terms
    with mp.workdps(precision):
        if math.isinf(hi):
            inv = invariants(d)
            if abs(inv.rho) >= 1 and not (
                abs(abs(inv.rho) - 1) < 1e-12
                and (inv.nu < 0 or (inv.nu == 0 and complex(inv.gamma).real < -1))
            ):
                raise DomainError(
                    f"infinite sum with |rho|={abs(inv.rho)} does not converge absolutely"
                )
        total = mp.mpf(0)
        prev = None
        steady = 0
        k = lo
        count = 0
        while True:
            if not math.isinf(hi) and k > hi:
                return +total
            term = _term(d, k, n)
            total += term
            count += 1
            if count > max_terms:
                raise NonConvergence(f"no certified tail within {max_terms} terms")
            if math.isinf(hi) and prev is not None and abs(prev) > 0:
                q = abs(term) / abs(prev)
                steady = steady + 1 if q < 1.0 else 0
                if steady >= 5:
                    tail = mp.mpf("1.1") * abs(term) * q / (1 - q)
                    if abs(total) > 0 and tail <= mp.mpf(tail_tolerance) * abs(total):
                        return +total
            prev = term
            k += 1


# -- serialization ---------------------------------------------------------------


def descriptor_to_json(d: SumDescriptor) -> str:
    doc = {
        "factors": [
            {
                "sigma": f.sigma,
                "lambda": f.lam,
                "alpha_re": complex(f.alpha).real,
                "alpha_im": complex(f.alpha).imag,
                "side": f.side.value,
            }
            for f in d.factors
        ],
        "r0": d.r0,
        "r1": "inf" if math.isinf(d.r1) else d.r1,
        "z": d.z,
    }
    return json.dumps(doc, indent=2)


def descriptor_from_json(text: str) -> SumDescriptor:
    try:
        doc = json.loads(text)
        factors = []
        for f in doc["factors"]:
            alpha = f["alpha_re"] + 1j * f.get("alpha_im", 0.0)
            if alpha.imag == 0.0:
                alpha = alpha.real
            factors.append(GammaFactor(f["sigma"], f["lambda"], alpha, Side(f["side"])))
        r1 = doc["r1"]
        r1 = math.inf if isinstance(r1, str) and r1.lower() in ("inf", "infinity") else float(r1)
        return SumDescriptor(tuple(factors), float(doc["r0"]), r1, float(doc["z"]))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise DomainError(f"malformed descriptor document: {exc}") from exc
