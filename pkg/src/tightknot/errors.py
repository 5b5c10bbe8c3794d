"""Exception hierarchy shared across the toolkit.

Two broad families matter to callers: ``ParameterError`` (bad arguments,
configs or input files; CLI exit code 2) and ``DomainError`` (the inputs were
well-formed but the requested value does not exist; CLI exit code 3).
"""


class ParameterError(ValueError):
    """Bad argument, configuration value, or input file."""


class InvalidKnotError(ParameterError):
    """Vertex data cannot represent a valid closed polygonal knot."""


class KnotParseError(ParameterError):
    """Malformed knot coordinate file."""


class DomainError(ValueError):
    """Value outside the mathematical domain of an operation."""


class GeometricDegeneracyError(DomainError):
    """Coincident or intersecting strands make the result undefined."""


class RegularityError(DomainError):
    """Tube coordinates lose regularity (Jacobian reaches zero)."""


class PreconditionError(DomainError):
    """Input state violates an operation precondition."""
