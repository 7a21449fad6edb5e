"""Gauss continued fraction truncation-error asymptotics and a discrete
Laplace method for gamma-factor sums."""

from .asym import (
    CasKind,
    borwein_bound,
    casoratian_closed,
    dilation,
    dominant_asym_z_neg,
    dominant_asym_z_pos,
    error_asymptote,
    error_asymptote_star,
    error_estimate_components,
    recessive_asym,
    recessive_components,
)
from .cf import (
    CFCoefficientStream,
    CFState,
    CFVariant,
    coefficient,
    convergent,
    convergent_checkpoints,
    truncation_error_actual,
    truncation_error_star_actual,
)
from .decompose import ComponentDecomposition, decompose, even_odd_split
from .dlm import (
    AsymptoticForm,
    GammaFactor,
    Side,
    SumDescriptor,
    brute_force,
    descriptor_from_json,
    descriptor_to_json,
    find_maxima,
    invariants,
    leading_asymptote,
    phase,
    tail_bound_shape,
    validate,
)
from .hyp import (
    ContiguousRelation,
    EvalContext,
    FrobeniusKind,
    chi,
    connection_coefficients,
    connection_residuals,
    contiguous_residual,
    frobenius,
    hgf,
    hyp2f1,
)
from .oracle import HighPrecisionReal, cf_exact, series_highprec
from .params import (
    K,
    ONE,
    P,
    ParamTriple,
    ShiftVector,
    check_gcf_admissible,
    check_star_admissible,
    shift,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
