"""Exception taxonomy shared by all modules.

The CLI maps these onto distinct exit codes so callers can tell bad input
apart from a genuinely degenerate (non-normal) Pade table.
"""


class PadeError(Exception):
    """Base class for all library errors."""


class InputError(PadeError):
    """Malformed input data (files, parameters)."""


class OrderError(InputError):
    """A series does not carry enough coefficients for the requested orders."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class DegenerateTableError(PadeError):
    """A zero pivot was hit: the Pade table is non-normal at this entry."""


class ResonanceError(InputError):
    """A divisor n + (m-1)*beta vanished while generating the Riccati series."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PoleError(PadeError):
    """Evaluation at a point where a denominator vanishes."""


class EstimationSingularError(DegenerateTableError):
    """The linear solve for the free series parameter has a zero denominator."""
