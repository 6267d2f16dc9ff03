import re

from model import Atom
from frontends.base import BaseDecoder, numbered_lines
from frontends.exceptions import CspError, LineMatchError

from .problem import Constraint, Csp, DifferenceConstraint, TableConstraint, UnaryConstraint

NAME = r'[A-Za-z_]\w*'
VALUE = rf'-?\d+|{NAME}'
RANGE_PATTERN = re.compile(r'^(-?\d+)\s*\.\.\s*(-?\d+)$')
VALUES_PATTERN = re.compile(rf'^(?:{VALUE})(?:\s+(?:{VALUE}))*$')
PAIR_PATTERN = re.compile(rf'\(\s*({VALUE})\s*,\s*({VALUE})\s*\)')
PAIRS_PATTERN = re.compile(rf'^(?:\(\s*(?:{VALUE})\s*,\s*(?:{VALUE})\s*\)\s*)*$')

PATTERNS = {
    'var': re.compile(rf'^var\s+({NAME})\s+(.+)$'),
    'con': re.compile(rf'^con\s+({NAME}(?:\s+{NAME})*?)\s+(in|diff|allow)(?:\s+(.*))?$'),
}


def decode_value(text: str) -> Atom:
    return int(text) if re.fullmatch(r'-?\d+', text) else text


def decode_values(text: str, number: int) -> list[Atom]:
    """Decode `lo..hi` or a whitespace separated list of values.

    Raises:
        LineMatchError: If `text` is neither.
    """
    match = RANGE_PATTERN.match(text)

    if match is not None:
        return list(range(int(match.group(1)), int(match.group(2)) + 1))

    if VALUES_PATTERN.match(text) is None:
        raise LineMatchError(f'Expected "lo..hi" or a list of values, got "{text}".', number)

    return [decode_value(value) for value in text.split()]


class CspDecoder(BaseDecoder[Csp]):
    """Decoder of `.csp` files.

    ```
    var s1 0..8
    var s2 0..8
    con s1 in 0..4
    con s1 s2 diff 3..4
    con s1 s2 allow (0,3) (1,4)
    ```
    A unary range is cut down to the domain of its variable; an explicit value list must lie inside it.
    """

    patterns = PATTERNS

    def decode(self, text: str) -> Csp:
        """Decode a binary constraint problem.

        Raises:
            LineMatchError: If a line has none of the shapes above.
            CspError: If a constraint has the wrong number of variables, or the problem is invalid, see `Csp`.
        """
        domains: dict[str, frozenset[Atom]] = {}
        pending: list[tuple[int, list[str], str, str]] = []

        for number, content in numbered_lines(text):
            name, match = self.match_line(number, content)

            if name == 'var':
                domains[match.group(1)] = frozenset(decode_values(match.group(2), number))
            else:
                pending.append((number, match.group(1).split(), match.group(2), (match.group(3) or '').strip()))

        constraints = [self._constraint(number, variables, kind, rest, domains) for number, variables, kind, rest in pending]

        return Csp(tuple(domains), domains, tuple(constraints))

    def _constraint(self, number: int, variables: list[str], kind: str, rest: str, domains: dict[str, frozenset[Atom]]) -> Constraint:
        expected = 1 if kind == 'in' else 2

        if len(variables) != expected:
            raise CspError(f'line {number}: "{kind}" constraints take {expected} variable(s), got {variables}; only unary and binary constraints are supported.')

        if kind == 'in':
            values = frozenset(decode_values(rest, number))

            if RANGE_PATTERN.match(rest) is not None and variables[0] in domains:
                values &= domains[variables[0]]

            return UnaryConstraint(variables[0], values)

        if kind == 'diff':
            match = RANGE_PATTERN.match(rest)

            if match is None:
                raise LineMatchError(f'Expected "lo..hi" after diff, got "{rest}".', number)

            return DifferenceConstraint(variables[0], variables[1], int(match.group(1)), int(match.group(2)))

        if PAIRS_PATTERN.match(rest) is None:
            raise LineMatchError(f'Expected pairs "(a,b)" after allow, got "{rest}".', number)

        pairs = frozenset((decode_value(a), decode_value(b)) for a, b in PAIR_PATTERN.findall(rest))

        return TableConstraint(variables[0], variables[1], pairs)
