"""Exact computation and verification toolkit for Fubini-type polynomials."""

from fubini.combinat import (
    ResourceLimitError,
    ordered_partition_oracle,
    stirling1_r_unsigned,
    stirling2,
    stirling2_r,
)
from fubini.families import (
    MultiRSpec,
    derivative_identity_check,
    fubini,
    fubini_multi,
    fubini_rs,
    p_poly,
    real_roots_certify,
    rl_build,
    t_poly,
)
from fubini.poly import IntPoly, ModPoly, RatPoly, mod_inv, reduce_mod
from fubini.report import CheckReport
from fubini.series import egf_series, log_egf_series, series_eval
from fubini.sturm import sturm_count_nonpositive
from fubini.umbra import UmbralExpr, umbral_eval

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "IntPoly",
    "ModPoly",
    "MultiRSpec",
    "RatPoly",
    "ResourceLimitError",
    "UmbralExpr",
    "derivative_identity_check",
    "egf_series",
    "fubini",
    "fubini_multi",
    "fubini_rs",
    "log_egf_series",
    "mod_inv",
    "ordered_partition_oracle",
    "p_poly",
    "real_roots_certify",
    "reduce_mod",
    "rl_build",
    "series_eval",
    "stirling1_r_unsigned",
    "stirling2",
    "stirling2_r",
    "sturm_count_nonpositive",
    "t_poly",
    "umbral_eval",
]
