"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotATree(GraphError):
    pass


class NotPresent(GraphError):
    """An edge or vertex required by an operation does not exist."""


class UniverseMismatch(GraphError):
    """A vertex set was built against a different vertex count."""


class NoCode(GraphError):
    """The graph admits no identifying open code.

    Carries a witness: either an isolated vertex or a pair of open twins.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class TooLarge(GraphError):
    pass


class TooSmall(GraphError):
    pass


class BadParam(GraphError, ValueError):
    pass


class NotInFamily(GraphError):
    pass


class DegreeExceeded(GraphError):
    pass


class FourCyclePresent(GraphError):
    pass


class ParseError(GraphError):
    """Malformed input text; records where parsing failed."""

    def __init__(self, message, line=None, position=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if position is not None:
            loc.append(f"position {position}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.position = position


class ConstructionError(GraphError):
    """A constructive algorithm could not complete; carries its trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
