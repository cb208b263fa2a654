"""Exception hierarchy shared across the package.

Each error carries a stable ``code`` string so the CLI can map failures
to documented exit codes and sweep rows can record why they failed.
"""

from __future__ import annotations


class OdeStabError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class NonfiniteStateError(OdeStabError):
    """The integrator produced NaN/Inf (blow-up or bad right-hand side)."""

    code = "NONFINITE_STATE"

    def __init__(self, message: str, time: float | None = None):
        super().__init__(message)
        self.time = time


class GridMismatchError(OdeStabError):
    """Two trajectories do not share the same time grid."""

    code = "GRID_MISMATCH"


class DimMismatchError(OdeStabError):
    """Inconsistent vector/matrix dimensions."""

    code = "DIM_MISMATCH"


class InvalidAlphaError(OdeStabError):
    """Exponent outside [0, 1) in the nonlinear integral inequality."""

    code = "INVALID_ALPHA"


class BadInitialError(OdeStabError):
    """A path that must start at the origin does not."""

    code = "BAD_INITIAL"


class HypothesisViolationError(OdeStabError):
    """A model fails one of its declared structural hypotheses."""

    code = "HYPOTHESIS_VIOLATION"


class DegenerateBoxError(OdeStabError):
    """A sampling box with zero volume cannot be sampled."""

    code = "DEGENERATE_BOX"


class ConfigError(OdeStabError):
    """Malformed or unknown configuration input."""

    code = "CONFIG_ERROR"
