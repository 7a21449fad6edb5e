"""Parameter triples (a, b; c) for the Gauss family and their shift algebra.

A triple can be shifted by integer vectors; the two built-in shifts are
K = (1, 0; 1) and P = K + sigma(K) = (1, 1; 2), where sigma swaps the two
upper parameters.  Admissibility predicates guard the continued-fraction
coefficients against vanishing numerators/denominators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gammafn import is_nonpositive_int, nearest_int_dist

#: Tolerance on distance-to-integer used by the admissibility predicates.
#: Parameters closer than this to a forbidden integer are rejected because
#: downstream gamma/sine factors become numerically useless there.
INT_TOL = 1e-9


@dataclass(frozen=True)
class ShiftVector:
    """Integer shift (da, db; dc) acting componentwise on a triple."""

    da: int
    db: int
    dc: int

    def sigma(self) -> "ShiftVector":
        return ShiftVector(self.db, self.da, self.dc)

    def __add__(self, other: "ShiftVector") -> "ShiftVector":
        return ShiftVector(self.da + other.da, self.db + other.db, self.dc + other.dc)

    def __mul__(self, times: int) -> "ShiftVector":
        return ShiftVector(self.da * times, self.db * times, self.dc * times)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ParamTriple:
    """Upper parameters a, b and lower parameter c.

    Values may be complex; the numerically verified pipeline only exercises
    real parts, imaginary parts are carried through arithmetic untouched.
    """

    a: complex
    b: complex
    c: complex

    def sigma(self) -> "ParamTriple":
        """Swap the upper parameters."""
        return ParamTriple(self.b, self.a, self.c)

    def __iter__(self):
        return iter((self.a, self.b, self.c))


K = ShiftVector(1, 0, 1)
P = ShiftVector(1, 1, 2)
ONE = ShiftVector(1, 1, 1)


def shift(t: ParamTriple, v: ShiftVector, times: int = 1) -> ParamTriple:
    """Componentwise t + times*v."""
    return ParamTriple(t.a + times * v.da, t.b + times * v.db, t.c + times * v.dc)


def _is_int_at_most(x, bound: int, tol: float = INT_TOL) -> bool:
    re = x.real if isinstance(x, complex) else float(x)
    return nearest_int_dist(x) <= tol and round(re) <= bound


def check_gcf_admissible(t: ParamTriple) -> bool:
    """Whether every partial numerator/denominator of the full fraction is
    finite and nonzero: a, c-b not in Z_{<= -1} and b, c, c-a not in Z_{<= 0}.
    """
    a, b, c = t
    if _is_int_at_most(a, -1) or _is_int_at_most(c - b, -1):
        return False
    return not (
        is_nonpositive_int(b, INT_TOL)
        or is_nonpositive_int(c, INT_TOL)
        or is_nonpositive_int(c - a, INT_TOL)
    )


def check_star_admissible(b, c) -> bool:
    """Specialized-fraction admissibility: b, c, c-b not in Z_{<= 0}."""
    return not (
        is_nonpositive_int(b, INT_TOL)
        or is_nonpositive_int(c, INT_TOL)
        or is_nonpositive_int(c - b, INT_TOL)
    )
