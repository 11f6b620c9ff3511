"""
Typed errors for the reaction-network toolkit
"""

from typing import Optional


class CrnError(Exception):
    """Root of every error raised by the toolkit"""


class NetworkParseError(CrnError, ValueError):
    """Syntax or content error in a network file"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(f"{location}{message}")


class DimensionMismatchError(CrnError, ValueError):
    """Two networks (or a network and a point) live in different ambient spaces"""


class MalformedProgramError(CrnError, ValueError):
    """A linear program whose rows, bounds or relations do not fit together"""


class ArrangementTooLargeError(CrnError, ValueError):
    """Too many distinct hyperplanes to enumerate directions exactly"""


class HypothesisError(CrnError):
    """A hypothesis required by a construction does not hold"""

    hypothesis = "unspecified"

    def __init__(self, message: str):
        super().__init__(message)
        self.reason = message


class NotStronglyEndotacticError(HypothesisError):
    hypothesis = "strongly_endotactic"


class DegenerateHullError(HypothesisError):
    hypothesis = "two_dimensional"

    def __init__(self, message: str, dimension: Optional[int] = None):
        super().__init__(message)
        self.dimension = dimension


class InteriorSourcesError(HypothesisError):
    hypothesis = "sources_on_boundary"


class NeitherConditionHoldsError(HypothesisError):
    hypothesis = "boundary_or_interior_net_vector"


class HypothesisFailedError(HypothesisError):
    hypothesis = "terminal_interior"


class InternalInvariantError(CrnError, RuntimeError):
    """A construction produced something its own proof rules out"""
