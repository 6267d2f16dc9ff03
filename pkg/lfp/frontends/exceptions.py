"""Module for exceptions that can occur when decoding or compiling problem instances."""

from model import LfpError


class FrontendError(LfpError):
    """Base class of every frontend error."""
    pass


class LineMatchError(FrontendError):
    """A line of a problem file matches none of the patterns of its format.

    Attributes:
        line:
            1-based number of the offending line.
    """

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f'line {line}: {message}')
        self.line = line


class CfgError(FrontendError):
    """Control flow graph has no unique entry or exit, or kill/gen/iota mention unknown items."""
    pass


class CspError(FrontendError):
    """Constraint problem uses undeclared variables, non-binary constraints or tuples outside the domains."""
    pass


class CtlError(FrontendError):
    """CTL formula could not be parsed or mentions an unknown atomic proposition."""
    pass


class KripkeError(FrontendError):
    """Transition system has terminal states, or transitions and labels mention unknown states."""
    pass
