"""Exception hierarchy shared by the solvers, generators and the CLI."""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .graph import Graph


class PowerDomError(Exception):
    """Base class for all powerdom errors."""


class InputError(PowerDomError, ValueError):
    """Malformed parameters or documents. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(PowerDomError):
    """A configured cap was exceeded or a sampler ran out of attempts."""


class ConsistencyError(PowerDomError):
    """A solver's self-check on its own output failed."""


class BoundViolationError(PowerDomError):
    """An instance beat the (n+1)/5 bound; carries the offending graph."""

    def __init__(self, message: str, instance: str, graph: "Graph"):
        self.instance = instance
        self.graph = graph
        super().__init__(message)
