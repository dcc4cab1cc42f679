"""Exception hierarchy for the driftline package.

Every error raised by the library derives from DriftlineError so callers
(and the CLI exit-code mapping) can catch numerical failures in one place.
"""


class DriftlineError(Exception):
    """Base class for all driftline errors."""


class InvalidParams(DriftlineError):
    """Model parameters violate a structural invariant (e.g. negative rate)."""


class GammaUndefined(DriftlineError):
    """gamma was queried while gamma^2 < 0 (imaginary decay wavenumber)."""


class OscillatoryGamma(DriftlineError):
    """Operation requires a real positive gamma but gamma^2 <= 0."""


class SingularSystem(DriftlineError):
    """The 2x2 boundary linear system is singular (degenerate parameters)."""


class AmbiguousCase(DriftlineError):
    """Parameters sit exactly on a thermodynamic case boundary (gamma = |u|/2)."""


class UndefinedAtTZero(DriftlineError):
    """The propagator kernel is a delta distribution at t = 0."""


class ZeroBulkRate(DriftlineError):
    """The bulk rate a is zero where a formula divides by it."""


class UnsupportedRegime(DriftlineError):
    """Parameters are outside the regime the closed form is derived for."""


class QuadratureFailure(DriftlineError):
    """Adaptive quadrature could not reach the requested tolerance."""


class DegenerateDenominator(DriftlineError):
    """A closed-form denominator vanishes (e.g. u^2 = 2 gamma^2)."""


class IncompleteSpectrum(DriftlineError):
    """Fewer eigenmodes found than requested below the scan cutoff."""


class DegenerateNorm(DriftlineError):
    """The biorthogonal norm integral vanishes (exceptional point)."""


class CellPecletError(DriftlineError):
    """|u| dx / 2 >= 1: the centered drift discretization is unresolved."""


class NonFiniteState(DriftlineError):
    """Time integration produced a non-finite value (instability/divergence)."""


class ConvergenceFailure(DriftlineError):
    """The matrix eigensolver failed to converge."""


class NonDecayingSignal(DriftlineError):
    """The trajectory norm is not monotone decreasing over the fit window."""


class InvalidMoments(DriftlineError):
    """Requested noise moments are unrealizable for the distribution family."""


class UnstableParams(DriftlineError):
    """No stationary state exists; the ensemble cannot converge."""


class ParseError(DriftlineError):
    """Config text could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(DriftlineError):
    """Config parsed but a key or value is invalid."""
