"""Shared plumbing: exact coefficient rings, errors, settings and logging."""

from patternmap.base.config import Mode, Settings, Theory, get_config
from patternmap.base.errors import (
    ConfigError,
    CrossCheckFailure,
    DatumMismatchError,
    InputError,
    NonIntegralResultError,
    NonPolynomialResultError,
    NotARootError,
    NotDivisibleError,
    NotInSpanError,
    PatternMapError,
    RankMismatchError,
    RepNotMinimalError,
    UnsupportedTypeError,
)
from patternmap.base.logs import setup_logging
from patternmap.base.symbolic import (
    LaurentR,
    LinearForm,
    PolyS,
    exact_div_linear,
    exact_div_one_minus,
    laurent_mul,
    poly_mul,
    truncate_to_cohomology,
    weyl_subst,
)

__all__ = [
    "ConfigError", "CrossCheckFailure", "DatumMismatchError", "InputError",
    "LaurentR", "LinearForm", "Mode", "NonIntegralResultError", "NonPolynomialResultError",
    "NotARootError", "NotDivisibleError", "NotInSpanError", "PatternMapError", "PolyS",
    "RankMismatchError", "RepNotMinimalError", "Settings", "Theory", "UnsupportedTypeError",
    "exact_div_linear", "exact_div_one_minus", "get_config", "laurent_mul", "poly_mul",
    "setup_logging", "truncate_to_cohomology", "weyl_subst",
]
