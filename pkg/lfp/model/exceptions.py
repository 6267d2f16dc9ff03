"""Module for exceptions that can occur when building, checking or solving LFP formulae."""


class LfpError(Exception):
    """Base class of every error raised on purpose by this project."""
    pass


class UniverseError(LfpError):
    """Universe is empty, has duplicate atoms, mixes symbolic and integer atoms or is a non-contiguous integer set."""
    pass


class SignatureError(LfpError):
    """A relation or function symbol is unknown, or is used with the wrong arity."""
    pass


class FormulaError(LfpError):
    """Formula is structurally invalid.

    Raised for open clauses (a variable not bound by any quantifier), facts about relations
    that some layer asserts, a clause whose body does not match its kind, or generated symbols used by a program.
    """
    pass


class StratificationError(LfpError):
    """Layer sequence violates one of the three stratification bullets.

    Attributes:
        bullet:
            1 for re-assertion in a later layer, 2 for a positive use before the assertion completes,
            3 for a negative use at or after the assertion.
        relation:
            Name of the offending relation.
        used_layer:
            Layer (1-based) where the relation is used or first asserted.
        asserted_layer:
            Layer (1-based) where the conflicting assertion happens.
    """

    def __init__(self, bullet: int, relation: str, used_layer: int, asserted_layer: int, message: str) -> None:
        super().__init__(message)
        self.bullet = bullet
        self.relation = relation
        self.used_layer = used_layer
        self.asserted_layer = asserted_layer


class LatticeError(LfpError):
    """Interpretations compared or combined do not share a signature, or `meet` was given no models."""
    pass


class ParseError(LfpError):
    """Text could not be parsed.

    Attributes:
        line:
            1-based line of the offending token.
        column:
            1-based column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f'{line}:{column}: {message}')
        self.line = line
        self.column = column
