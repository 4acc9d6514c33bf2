"""Exception hierarchy shared by every module."""


class EdgeConeError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(EdgeConeError, ValueError):
    """A graph violates the connected-simple-nonempty invariants."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedLineError(GraphError):
    pass


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EmptyEdgeSetError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class CapExceededError(EdgeConeError):
    """An enumeration hit its configured resource cap.

    ``partial`` carries whatever was collected before the cap was hit.
    """

    def __init__(self, what, cap, partial=None):
        super().__init__(f"{what}: cap of {cap} exceeded")
        self.what = what
        self.cap = cap
        self.partial = partial if partial is not None else []


class ContractError(EdgeConeError, ValueError):
    """A caller broke an operation's precondition."""


class InternalInvariantError(EdgeConeError, AssertionError):
    """An internal consistency check failed; indicates a bug."""
