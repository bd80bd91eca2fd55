"""Error taxonomy for the pipeline.

Every domain error raised by this package derives from PipelineError so the
CLI can map any failure to exit code 1 plus a machine-readable error name
(the class name).
"""


class PipelineError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


# p-adic arithmetic
class PrecisionExhausted(PipelineError):
    """Cancellation consumed every retained digit of the working precision."""


class NonUnitInverse(PipelineError):
    """Inversion requested for an element that is not a unit."""


class ZeroArgument(PipelineError):
    """A nonzero p-adic argument was required."""


# series dynamics
class OutOfDomain(PipelineError):
    """Series evaluated outside the maximal ideal."""


# hole sequences / continuation
class InvalidRadii(PipelineError):
    """Radius ordering 0 < r < r* < 1 violated."""


class DivisionByZero(PipelineError):
    """Continuation correction divided by a vanishing evaluator value."""


# elliptic curves
class SingularCurve(PipelineError):
    """Vanishing discriminant where a non-singular curve is required."""


class InsufficientOrder(PipelineError):
    """Series truncation order too small to recover the curve."""


class PrimeTooLarge(PipelineError):
    """Point counting requested beyond the configured prime bound."""


class BadReductionRequired(PipelineError):
    """Tate parameter needs |j|_p > 1, i.e. v_p(j) < 0."""


class NoCommonBadPrime(PipelineError):
    """The two curves share no multiplicative prime (ground-field change)."""


class NotSemistable(PipelineError):
    """An additive prime was found where semi-stability is required."""


# coefficient vectors
class DegenerateCombination(PipelineError):
    """Combined leading coefficient vanished; no unit rescaling exists."""


# arithmetical formation
class ZeroSum(PipelineError):
    """Coefficient normalization attempted with a vanishing total."""


class DomainError(PipelineError):
    """A real parameter left its documented domain (e.g. s <= 2)."""


# surface scanning
class EndpointSingular(PipelineError):
    """An endpoint fiber of the family is singular."""


class NoAdmissiblePath(PipelineError):
    """Gap fibers sever every step window between the endpoints."""


# planar model
class NegativeValuation(PipelineError):
    """Embedding is only defined on p-adic integers (valuation >= 0)."""


class IoFailure(PipelineError):
    """A figure or data file could not be written."""


class DegenerateConfiguration(PipelineError):
    """Point configuration too degenerate for a similarity fit."""


# field ingestion
class ParseError(PipelineError):
    """Malformed or non-finite field data."""


class NonRectangularGrid(PipelineError):
    """Field samples do not form a complete rectangular grid."""


class SeedOutOfDomain(PipelineError):
    """Streamline seed outside the field domain."""


class EmptyInput(PipelineError):
    """An operation received an empty point cloud or line set."""


# CLI
class UsageError(PipelineError):
    """Command line arguments do not form a valid invocation."""
