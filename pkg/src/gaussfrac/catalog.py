"""Ready-made gamma-factor sum descriptors used across tests and demos.

g1(n; a,b,c; z) = sum_{k>=0}    G(k+n+a) G(k+n+b) / (G(k+1) G(k+c)) z^k
g2(n; a,b,c; z) = sum_{k=0}^{n-1} G(k+n+a) / (G(k+1) G(k+c) G(-k+n+b)) z^k
g3(n; a,b,c,d; z) = sum_{k>=n}  G(2k+2n+a) G(2k-2n+b) / (G(2k+c) G(2k+d)) z^k
g4(n; a,b,c; z) = sum_{k>=0}    G(k+n+a) G(k-n+b) / (G(k+1) G(k+c)) z^k

g4 (taken at z < 0) violates positivity on (0, 1) and is the canonical
input for the decomposition machinery; its tail from k = n is `h_tail`.
"""

from __future__ import annotations

import math

from .dlm import GammaFactor, Side, SumDescriptor

N, D = Side.NUMERATOR, Side.DENOMINATOR


def g1(a, b, c, z) -> SumDescriptor:
    return SumDescriptor(
        (
            GammaFactor(1, 1, a, N),
            GammaFactor(1, 1, b, N),
            GammaFactor(1, 0, 1, D),
            GammaFactor(1, 0, c, D),
        ),
        0.0,
        math.inf,
        z,
    )


def g2(a, b, c, z) -> SumDescriptor:
    return SumDescriptor(
        (
            GammaFactor(1, 1, a, N),
            GammaFactor(1, 0, 1, D),
            GammaFactor(1, 0, c, D),
            GammaFactor(-1, 1, b, D),
        ),
        0.0,
        1.0,
        z,
    )


def g3(a, b, c, d, z) -> SumDescriptor:
    return SumDescriptor(
        (
            GammaFactor(2, 2, a, N),
            GammaFactor(2, -2, b, N),
            GammaFactor(2, 0, c, D),
            GammaFactor(2, 0, d, D),
        ),
        1.0,
        math.inf,
        z,
    )


def g4(a, b, c, z) -> SumDescriptor:
    return SumDescriptor(
        (
            GammaFactor(1, 1, a, N),
            GammaFactor(1, -1, b, N),
            GammaFactor(1, 0, 1, D),
            GammaFactor(1, 0, c, D),
        ),
        0.0,
        math.inf,
        z,
    )


def h_tail(a, b, c, z) -> SumDescriptor:
    """The k >= n tail of g4 (all factors positive there)."""
    return SumDescriptor(
        (
            GammaFactor(1, 1, a, N),
            GammaFactor(1, -1, b, N),
            GammaFactor(1, 0, 1, D),
            GammaFactor(1, 0, c, D),
        ),
        1.0,
        math.inf,
        z,
    )
