"""Exception hierarchy shared by all bugraph modules."""


class GraphError(ValueError):
    """Base class for invalid graph input or an operation outside its domain."""


class DisconnectedGraph(GraphError):
    pass


class NotExactlyTwoConnected(GraphError):
    pass


class InvalidCut(GraphError):
    pass


class TooLarge(GraphError):
    pass


class Unsupported(GraphError):
    pass


class MalformedGraph6(GraphError):
    """Raised for undecodable graph6 text; ``line_no`` is set when streaming."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
