import re
from abc import ABC, abstractmethod
from typing import Generic, Iterator, TypeVar

from engine import Solver
from logger import logger
from model import Interpretation, LayeredFormula

from .exceptions import LineMatchError

Problem = TypeVar('Problem')
Result = TypeVar('Result')

COMMENT_PATTERN = re.compile(r'#.*$')


def numbered_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield `(line number, content)` for every line that is not blank once comments are removed."""
    for number, line in enumerate(text.splitlines(), start=1):
        content = COMMENT_PATTERN.sub('', line).strip()

        if content:
            yield number, content


class BaseDecoder(ABC, Generic[Problem]):
    """Abstract base class for problem file decoders.

    Every line oriented format gets one decoder; decoders only check the shape of lines,
    the problem dataclass they build validates everything else.
    """

    patterns: dict[str, re.Pattern]

    def match_line(self, number: int, content: str) -> tuple[str, re.Match]:
        """Find the pattern matching `content`.

        Returns:
            Name of the pattern and its match.

        Raises:
            LineMatchError: If no pattern matches.
        """
        for name, pattern in self.patterns.items():
            match = pattern.match(content)

            if match is not None:
                return name, match

        raise LineMatchError(f'Could not understand "{content}".', number)

    @abstractmethod
    def decode(self, text: str) -> Problem:
        """Decode the text of a problem file.

        Args:
            text:
                Whole file content.

        Returns:
            Problem instance.
        """
        pass


class BaseFrontend(ABC, Generic[Problem, Result]):
    """Blueprint for compiling one kind of problem into LFP.

    A frontend knows how to turn its problem into a `LayeredFormula`, how to read the answer
    back from the least model, and how to get the same answer from a classical reference algorithm.
    `BaseFrontend` should never be instantiated directly.

    Attributes:
        decoder:
            Decoder for the problem file format of this frontend.
        problem:
            Problem instance being solved.
    """

    decoder: BaseDecoder[Problem]

    def __init__(self, problem: Problem) -> None:
        self.problem = problem

    @classmethod
    def from_text(cls, text: str, **options) -> 'BaseFrontend':
        return cls(cls.decoder.decode(text), **options)

    @abstractmethod
    def compile(self) -> LayeredFormula:
        pass

    @abstractmethod
    def extract(self, rho: Interpretation) -> Result:
        """Read the answer to the problem off the least model of `compile()`."""
        pass

    @abstractmethod
    def oracle(self) -> Result:
        """Answer the problem without LFP, with the classical algorithm."""
        pass

    def solve(self) -> Result:
        return self.extract(Solver(self.compile()).solve())

    def differential(self) -> tuple[Result, Result]:
        """Solve both ways and log a warning when the answers differ.

        Returns:
            Answer of the solver and answer of the oracle, in that order.
        """
        solved = self.solve()
        expected = self.oracle()

        if solved != expected:
            logger.warning(f'{self.__class__.__name__}: solver and oracle disagree. Solver: {solved}. Oracle: {expected}')

        return solved, expected
