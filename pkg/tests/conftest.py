import math
from fractions import Fraction

import pytest

from gaussfrac.params import ParamTriple

# generic real parameter point used throughout the identity suites
GENERIC = ParamTriple(0.5, 1.5, 2.25)
GENERIC_Q = ParamTriple(Fraction(1, 2), Fraction(3, 2), Fraction(9, 4))

SMALL = ParamTriple(0.3, 0.7, 1.1)
SMALL_Q = ParamTriple(Fraction(3, 10), Fraction(7, 10), Fraction(11, 10))


@pytest.fixture
def generic():
    return GENERIC


def rel_err(x, y) -> float:
    x, y = float(x), float(y)
    return abs(x - y) / max(abs(x), abs(y), 1e-300)


def geometric_rate(values):
    """Fitted ratio exp(slope) of log|values| against the index."""
    pts = [(i, math.log(abs(float(v)))) for i, v in enumerate(values) if float(v) != 0.0]
    n = len(pts)
    sx = sum(p[0] for p in pts)
    sy = sum(p[1] for p in pts)
    sxx = sum(p[0] ** 2 for p in pts)
    sxy = sum(p[0] * p[1] for p in pts)
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    return math.exp(slope)
