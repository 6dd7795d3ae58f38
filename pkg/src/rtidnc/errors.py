"""Error types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An exhaustive routine was asked to exceed its enumeration budget."""


class ParseError(ValueError):
    """A text fixture (matrix or cover instance) is malformed.

    `line` is the 1-based line number of the offending line, 0 when the
    problem is not tied to a specific line.
    """

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
