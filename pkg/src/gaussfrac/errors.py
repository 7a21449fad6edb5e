"""Exception hierarchy shared by all gaussfrac modules."""


class GaussfracError(Exception):
    """Base class for all library errors."""


class PoleAtParameter(GaussfracError):
    """A gamma or sine factor is at (or dangerously near) a pole/zero."""


class DomainError(GaussfracError):
    """Argument outside the evaluation domain of the chosen routine."""


class NonConvergence(GaussfracError):
    """A series failed its convergence certificate within the term budget."""


class Inadmissible(GaussfracError):
    """Continued-fraction parameters violate the admissibility conditions."""


class ZeroDenominator(GaussfracError):
    """A continued-fraction denominator B_n vanished.

    The offending index is stored in ``index``.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"continued-fraction denominator vanished at index {index}")


class ZeroTarget(GaussfracError):
    """The reference hypergeometric value is (numerically) zero."""


class BoundaryMaximum(GaussfracError):
    """The phase maximum sits on the summation boundary.

    Interior-maximum asymptotics do not apply; the report built so far is
    attached as ``report``.
    """

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class DegenerateMaximum(GaussfracError):
    """An interior phase maximum has (numerically) vanishing curvature."""


class PsiTooSmall(GaussfracError):
    """Tail-bound base must exceed the phase maximum strictly."""


class NonGenericParameter(GaussfracError):
    """A reflection step hit sin(pi*alpha) = 0 for some offset parameter."""


class OutOfRegime(GaussfracError):
    """Inputs are outside the validity region of the requested bound."""
