"""Critical values, chambers and alpha-stability of L-quadric bundles.

Rationals come back as fractions.Fraction; the *_report functions and sweep
return the same JSON documents as the command-line tool, as dicts.
"""

from ._core import (
    CriticalValue,
    GridTooLarge,
    InfeasibleParams,
    InvalidBundle,
    MaximalDegree,
    ModuliParams,
    NonIntegralDegree,
    PatternQuadricBundle,
    PreconditionFailed,
    QuadricError,
    RankOutOfRange,
    __version__,
    alpha_extremes,
    chamber_samples,
    chambers,
    chambers_report,
    check_report,
    classify,
    connectedness_verdict,
    degree_window,
    enumerate_critical_values,
    expected_dimension,
    flip_codim_bound,
    generic_rank,
    geometry_report,
    higgs_report,
    is_alpha_independent,
    maxdeg_report,
    minimum_gamma_rank,
    rank2_report,
    rank2_walls,
    sweep,
    underlying_bundle_semistable,
)

__all__ = [name for name in dir() if not name.startswith("_")]
