"""Exception hierarchy shared by all chaoscope modules.

Input errors (bad files, bad values) and estimation errors (degenerate
data, unusable configurations) are kept in separate branches so the CLI
can map them to distinct exit codes.
"""


class ChaoscopeError(Exception):
    """Base class for all chaoscope errors."""


class InputError(ChaoscopeError):
    """Raised while reading or validating external input."""


class EstimationError(ChaoscopeError):
    """Raised while computing spectra, neighbors, or exponents."""


class EmptyInputError(InputError):
    """Input contained no usable values after filtering."""


class ParseError(InputError):
    """A line or field could not be parsed."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class IntervalRangeError(InputError):
    """An RR interval fell outside the physiological plausibility gate."""

    def __init__(self, index, value_s):
        super().__init__(f"interval {index} = {value_s:.6g} s outside (0.2, 5.0) s")
        self.index = index
        self.value_s = value_s


class BadParamsError(InputError):
    """Parameters outside their documented valid range."""


class UnitsError(InputError):
    """Operation requires a physical-seconds time base."""


class EmptySubsetError(InputError):
    """Cohort subset filter matched no records."""


class UnknownWaveletError(InputError):
    """Wavelet name not in the supported set."""


class TooShortError(EstimationError):
    """Series or range too short for the requested operation."""


class NoNeighborError(EstimationError):
    """No candidate satisfies the temporal-exclusion constraint."""


class DegenerateSpectrumError(EstimationError):
    """Spectrum carries no usable power (constant input)."""


class DegenerateNeighborsError(EstimationError):
    """All initial neighbor separations are zero."""


class InsufficientEvolutionError(EstimationError):
    """Trajectory evolution completed no usable events."""


class NoUsableReferenceError(EstimationError):
    """No reference trajectory produced a local exponent."""


class EmptySetError(EstimationError):
    """Aggregate requested over an empty collection."""


class NoReferenceError(EstimationError):
    """No ground-truth exponent is registered for this system."""
