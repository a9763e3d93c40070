"""Exact zeta functions of matroids: library and command-line interface."""

from .algebra import (LaurentPoly, PolyQT, Q_MINUS_ONE, RationalQT, RationalS,
                      q_analogue)
from .buildings import BuildingSet, sample_intermediate_building_sets
from .catalog import NAMED_MATROIDS, named_matroid
from .checks import CheckResult, Report, run_suites
from .errors import (EmptyGroundSet, InexactDivision, InternalInvariantError,
                     MatroidZetaError, NotComparable, NotExpandable,
                     ParseError, PoleAtZero, TooLarge, TranscriptionError)
from .lattice import FlatLattice
from .matroid import Matroid
from .oracle import char_poly_whitney, truncated_zeta_sum
from .zeta import (StructuredZeta, ZetaTerm, collapse, fy_hilbert_series,
                   h_polynomial_plain_sum, h_polynomials, limit_t_infinity,
                   motivic_zeta, mu_top, nested_coefficient,
                   nested_set_matroid, poincare_polynomials, scale_q,
                   series_coefficients, topological_zeta, vdv_zeta)

__version__ = "0.1.0"

__all__ = [
    "BuildingSet", "CheckResult", "EmptyGroundSet", "FlatLattice",
    "InexactDivision", "InternalInvariantError", "LaurentPoly", "Matroid",
    "MatroidZetaError", "NAMED_MATROIDS", "NotComparable", "NotExpandable",
    "ParseError", "PolyQT", "PoleAtZero", "Q_MINUS_ONE", "RationalQT",
    "RationalS", "Report", "StructuredZeta", "TooLarge",
    "TranscriptionError", "ZetaTerm",
    "char_poly_whitney", "collapse", "fy_hilbert_series",
    "h_polynomial_plain_sum", "h_polynomials", "limit_t_infinity",
    "motivic_zeta", "mu_top", "named_matroid", "nested_coefficient",
    "nested_set_matroid", "poincare_polynomials", "q_analogue",
    "run_suites", "sample_intermediate_building_sets", "scale_q",
    "series_coefficients", "topological_zeta", "truncated_zeta_sum",
    "vdv_zeta",
]
