"""Splitting gamma-factor sums whose linear forms change sign.

A sum sum_k G(k; n) z^k with integer slopes is cut at the positive roots
of the product of its linear forms.  On each piece every factor has a
fixed sign; negative factors are rewritten through the reflection
Gamma(x) Gamma(1-x) = pi / sin(pi x), which (slopes being integers) turns
the piece into a positive-factor sum in the variable (-1)^theta z times
the bookkeeping prefactor

    pi^(|Inum-| - |Jden-|) * prod sin(pi beta) / prod sin(pi alpha) * (-1)^(nu n).

Pieces whose effective variable is negative are further split into even
and odd k, producing sums in z^2 > 0 over the half parameter m
(n = 2m + parity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .dlm import GammaFactor, Side, SumDescriptor, brute_force
from .errors import DomainError, NonGenericParameter
from .gammafn import sinpi

_SIN_TOL = 1e-9


def _is_int(x) -> bool:
    return float(x) == round(float(x))


@dataclass(frozen=True)
class Component:
    """One interval piece of a decomposition, already reflected positive.

    The original piece equals prefactor_const * (-1)^(sign_exponent * n)
    times the descriptor's sum (whose variable is z_s = (-1)^theta z).
    """

    interval: tuple
    descriptor: SumDescriptor
    prefactor_const: float
    sign_exponent: int   # nu_s^-: parity in n
    variable_sign: int   # theta_s^-: parity applied to z

    def prefactor(self, n: int) -> float:
        return self.prefactor_const * (-1.0) ** ((self.sign_exponent * n) % 2)

    def value(self, n: int, *, precision: int = 30, tail_tolerance: float = 1e-14):
        """Evaluate the piece at parameter n, routing negative variables
        through the even/odd split."""
        if self.descriptor.z > 0:
            s = brute_force(
                self.descriptor, n, precision=precision, tail_tolerance=tail_tolerance
            )
        else:
            split = even_odd_split(self.descriptor, n % 2)
            s = split.value(n // 2, precision=precision, tail_tolerance=tail_tolerance)
        return self.prefactor(n) * s


@dataclass(frozen=True)
class ComponentDecomposition:
    breakpoints: tuple
    components: tuple

    def value(self, n: int, *, precision: int = 30, tail_tolerance: float = 1e-14):
        """Sum of all pieces; equals the original sum."""
        return mp.fsum(
            c.value(n, precision=precision, tail_tolerance=tail_tolerance)
            for c in self.components
        )


def decompose(d: SumDescriptor) -> ComponentDecomposition:
    """Cut [r0, r1] at the positive roots of the linear forms and reflect
    each piece positive.  Requires integer slopes (sigma, lam)."""
    for f in d.factors:
        if not (_is_int(f.sigma) and _is_int(f.lam)):
            raise DomainError(
                f"decomposition needs integer slopes, factor has ({f.sigma}, {f.lam})"
            )
    roots = set()
    for f in d.factors:
        if f.sigma != 0:
            r = -f.lam / f.sigma
            if d.r0 < r < d.r1:
                roots.add(float(r))
    breakpoints = sorted(roots)
    edges = [d.r0, *breakpoints, d.r1]

    components = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid = lo + 1.0 if math.isinf(hi) else 0.5 * (lo + hi)
        pos_factors = []
        pref = 1.0
        pi_power = 0
        nu_minus = 0
        theta_minus = 0
        for f in d.factors:
            if f.line(mid) > 0:
                pos_factors.append(f)
                continue
            # reflect: the factor's argument is negative on this piece
            s = sinpi(f.alpha)
            if abs(s) < _SIN_TOL:
                raise NonGenericParameter(
                    f"sin(pi*alpha)={s:.2e} for reflected factor "
                    f"Gamma({f.sigma}k+{f.lam}n+{f.alpha}); offsets must be non-integer"
                )
            flipped = GammaFactor(
                -f.sigma,
                -f.lam,
                1 - f.alpha,
                Side.DENOMINATOR if f.side is Side.NUMERATOR else Side.NUMERATOR,
            )
            pos_factors.append(flipped)
            if f.side is Side.NUMERATOR:
                pi_power += 1
                pref /= s
                nu_minus += int(round(f.lam))
                theta_minus += int(round(f.sigma))
            else:
                pi_power -= 1
                pref *= s
                nu_minus -= int(round(f.lam))
                theta_minus -= int(round(f.sigma))
        z_s = (-1.0) ** (theta_minus % 2) * d.z
        comp = Component(
            (lo, hi),
            SumDescriptor(tuple(pos_factors), lo, hi, z_s),
            math.pi**pi_power * pref,
            nu_minus % 2,
            theta_minus % 2,
        )
        components.append(comp)
    return ComponentDecomposition(tuple(breakpoints), tuple(components))


@dataclass(frozen=True)
class ParityPiece:
    """One parity class of a split: z_power * descriptor-sum at parameter m,
    with `upper_extra` additional terms past the ceil(r m) upper limit."""

    z_power: int
    descriptor: SumDescriptor
    upper_extra: int

    def is_empty(self, m: int) -> bool:
        lo, hi = self.descriptor.k_range(m)
        return not math.isinf(hi) and hi + self.upper_extra < lo


@dataclass(frozen=True)
class EvenOddSplit:
    """Even/odd-k split of a component at fixed parity of n (n = 2m + parity)."""

    parity: int
    z: float  # the (negative) variable of the component
    even: ParityPiece
    odd: ParityPiece

    def value(self, m: int, *, precision: int = 30, tail_tolerance: float = 1e-14):
        total = mp.mpf(0)
        for piece in (self.even, self.odd):
            if piece.is_empty(m):
                continue
            s = brute_force(
                piece.descriptor,
                m,
                precision=precision,
                tail_tolerance=tail_tolerance,
                extra_upper_terms=piece.upper_extra,
            )
            total += mp.power(mp.mpf(self.z), piece.z_power) * s
        return total


def even_odd_split(d: SumDescriptor, parity: int) -> EvenOddSplit:
    """Split sum_k G(k; n) z^k (z < 0) into even and odd k.

    With n = 2m + parity, each part is again a gamma-factor sum in the
    half parameter m with variable z^2 > 0.  Interval endpoints must be
    integers (or +inf): the reindexing k = 2j(+1) only stays inside the
    ceil(r m) range convention then.
    """
    if d.z >= 0:
        raise DomainError("even/odd split applies to negative variables")
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    if not _is_int(d.r0) or not (math.isinf(d.r1) or _is_int(d.r1)):
        raise DomainError(
            f"even/odd split needs integer interval endpoints, got [{d.r0}, {d.r1}]"
        )
    r0 = int(round(d.r0))
    r1_inf = math.isinf(d.r1)
    r1 = None if r1_inf else int(round(d.r1))
    z2 = d.z * d.z

    def build(k_offset: int, start_shift: int, upper_shift: int) -> ParityPiece:
        # k = 2j + k_offset, reindexed i = j - start_shift
        factors = tuple(
            GammaFactor(
                2 * f.sigma,
                2 * f.lam,
                f.alpha + f.sigma * (k_offset + 2 * start_shift) + f.lam * parity,
                f.side,
            )
            for f in d.factors
        )
        extra = 0 if r1_inf else upper_shift - start_shift
        piece_r1 = math.inf if r1_inf else float(r1)
        return ParityPiece(
            z_power=k_offset + 2 * start_shift,
            descriptor=SumDescriptor(factors, float(r0), piece_r1, z2),
            upper_extra=extra,
        )

    # even part: j >= ceil(r0 n / 2) = r0 m + ceil(r0 parity / 2)
    d0_even = math.ceil(r0 * parity / 2)
    d1_even = 0 if r1_inf else math.ceil(r1 * parity / 2)
    even = build(0, d0_even, d1_even)
    # odd part: j >= ceil((r0 n - 1)/2) = r0 m + ceil((r0 parity - 1)/2)
    d0_odd = math.ceil((r0 * parity - 1) / 2)
    d1_odd = 0 if r1_inf else math.ceil((r1 * parity - 1) / 2)
    odd = build(1, d0_odd, d1_odd)
    return EvenOddSplit(parity, d.z, even, odd)
