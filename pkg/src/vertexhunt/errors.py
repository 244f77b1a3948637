"""Domain error types shared across the package.

Everything deliberately raised by the library derives from
:class:`VertexHuntError`; callers (notably the CLI) can treat that base
class as "domain problem" and anything else as a bug.
"""


class VertexHuntError(Exception):
    """Base class for vertex-hunting domain errors."""


class InsufficientPointsError(VertexHuntError):
    """Fewer points than vertices requested."""


class DegenerateRankError(VertexHuntError):
    """The residual space collapsed before K distinct picks were made."""

    def __init__(self, message: str, degenerate_at: int):
        super().__init__(message)
        self.degenerate_at = degenerate_at


class SingularConfigurationError(VertexHuntError):
    """A diagnostic would divide by a (near-)zero singular value."""


class ProjectionNotApplicableError(VertexHuntError):
    """Ambient dimension too small for a rank-(K-1) hyperplane projector."""


class InvalidDeltaError(VertexHuntError):
    """Neighborhood radius is not a positive number."""


class AllPointsPrunedError(VertexHuntError):
    """Denoising removed every point."""


class TooFewRetainedError(VertexHuntError):
    """Fewer than K points survived pruning."""


class MissingPureNodeError(VertexHuntError):
    """A vertex has no observation assigned to it."""


class CsvParseError(Exception):
    """A cell of an input CSV failed to parse (1-based line/column)."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(message)
        self.line = line
        self.column = column
