"""Exception hierarchy shared by all modules.

Each class carries the CLI exit code it maps to.
"""


class PartialCubeError(Exception):
    exit_code = 1


class ParseError(PartialCubeError):
    """Malformed input text; ``line`` is 1-based when known."""

    exit_code = 1

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PropertyViolation(PartialCubeError):
    """Input is well-formed but lacks a required structural property."""

    exit_code = 2

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotPartialCube(PropertyViolation):
    pass


class ScaleLimitError(PartialCubeError):
    """An exponential-time routine refused an instance above its desk-scale bound."""

    exit_code = 3
