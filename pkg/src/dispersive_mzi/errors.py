"""Exception hierarchy shared across the toolkit.

Numerical-degeneracy conditions get their own branch so callers (in
particular the CLI) can distinguish "bad input" from "the statistic you
asked for is not defined at this operating point".
"""


class DispersiveMZIError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(DispersiveMZIError):
    """Invalid configuration or out-of-invariant input field."""


class NumericalDegeneracyError(DispersiveMZIError):
    """Base class for operating points where a statistic degenerates."""


class DegeneratePointError(NumericalDegeneracyError):
    """Binary outcome is deterministic: p0*(1-p0) below the configured floor."""


class DegenerateCountsError(NumericalDegeneracyError):
    """Empirical frequency hit 0 or 1; the plug-in Fisher matrix diverges."""


class DegenerateSupportError(NumericalDegeneracyError):
    """Density matrix support retained after eigenvalue flooring is too small."""


class CutoffTooSmallError(DispersiveMZIError):
    """Fock-space truncation leaks more probability than the allowed bound."""


class VisibilityRangeError(DispersiveMZIError):
    """Visibility argument left the invertible interval (0, 1)."""


class ZeroVisibilityError(DispersiveMZIError):
    """Phase inversion requested with no fringe contrast to invert."""


class ShrinkageDomainError(DispersiveMZIError):
    """De-shrunk visibility left (0, 1); correction is undefined."""


class IllConditionedFitError(DispersiveMZIError):
    """Regression design matrix is (near-)singular for the requested fit."""


class NonlinearityError(DispersiveMZIError):
    """Quadratic term dominates a susceptibility window; shrink eps samples."""


class DegenerateFitError(DispersiveMZIError):
    """Scaling fit has zero abscissa variance."""


class SearchRangeExhaustedError(DispersiveMZIError):
    """Crossover search ran past its upper bound without a hit."""


class ZeroIdealInformationError(DispersiveMZIError):
    """Robustness ratio undefined: ideal information is zero."""
