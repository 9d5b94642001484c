"""
Exception hierarchy shared by every hallshell module.
"""

from typing import Optional


class HallShellError(Exception):
    """Base class for all library errors."""


class InvalidInputError(HallShellError, ValueError):
    """Malformed or inconsistent input (bad family, transversal, word, shape...)."""


class EmptyMemberError(InvalidInputError):
    """A Hall, transversal or shelling operation was given an empty member."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"member {index} is empty; Hall operations need non-empty members")


class HypothesisError(HallShellError, ValueError):
    """A theorem hypothesis does not hold for the given input."""

    def __init__(self, hypothesis: str, detail: Optional[str] = None):
        self.hypothesis = hypothesis
        message = f"hypothesis violated: {hypothesis}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class OracleLimitError(HallShellError):
    """A brute-force oracle was asked to run above its size bound."""

    def __init__(self, what: str, actual: int, limit: int):
        self.what = what
        self.actual = actual
        self.limit = limit
        super().__init__(f"oracle limit: {what} = {actual} exceeds bound {limit}")
