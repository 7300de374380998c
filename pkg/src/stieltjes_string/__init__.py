"""Exact inverse spectral pipeline for discrete generalized indefinite strings.

moments -> Hankel determinants -> continued fraction -> string, plus the
forward node recursion that maps a string back to its Weyl-Titchmarsh
function.
"""

from .algebra import (
    ComplexRational,
    Polynomial,
    RationalFunction,
    rat_normalize,
    ratfun_equal,
    ratfun_laurent_at_infinity,
)
from .errors import (
    EvaluationAtPole,
    InconsistentMomentData,
    InternalInconsistency,
    InvalidMeasure,
    InvalidString,
    NoHerglotzExpansion,
    PipelineError,
    RatioUndefined,
)
from .expansion import (
    INFINITE,
    ContinuedFraction,
    StringData,
    analyze,
    check_coefficient_laws,
    contfrac_from_moments,
    cumulative_identities,
    rho_zero_ratio,
    string_from_moments,
)
from .forward import (
    eval_contfrac,
    roundtrip_measure,
    roundtrip_string,
    string_to_contfrac,
    weyl_from_contfrac,
    weyl_from_string,
)
from .generators import gen_random_measure, gen_random_string
from .hankel import HankelTable, KappaIndex, hankel_table, hankel_table_float, kappa_index, sylvester_residuals
from .moments import DiscreteMeasure, MomentSequence, moments_from_measure, moments_from_rational, weyl_from_measure

__version__ = "0.1.0"
