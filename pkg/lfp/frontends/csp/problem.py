from dataclasses import dataclass
from typing import Mapping

from model import Atom, Universe

from frontends.exceptions import CspError


@dataclass(frozen=True)
class UnaryConstraint:
    """`variable` must take one of the `allowed` values."""

    variable: str
    allowed: frozenset[Atom]


@dataclass(frozen=True)
class TableConstraint:
    """Explicit relation between two variables as a set of allowed `(left, right)` pairs."""

    left: str
    right: str
    pairs: frozenset[tuple[Atom, Atom]]

    def allows(self, a: Atom, b: Atom) -> bool:
        return (a, b) in self.pairs


@dataclass(frozen=True)
class DifferenceConstraint:
    """`low <= right - left <= high` over integer domains."""

    left: str
    right: str
    low: int
    high: int

    def allows(self, a: Atom, b: Atom) -> bool:
        return self.low <= b - a <= self.high


BinaryConstraint = TableConstraint | DifferenceConstraint
Constraint = UnaryConstraint | BinaryConstraint


@dataclass(frozen=True)
class Csp:
    """Binary constraint satisfaction problem `(N, D, C)`.

    Attributes:
        variables:
            Variable names, in declaration order.
        domains:
            Initial domain of every variable.
        constraints:
            Unary and binary constraints; their position is their number in the compiled formula.

    Raises:
        CspError: If a constraint mentions an undeclared variable, relates a variable to itself,
            allows values outside the domains, or a difference constraint is put on symbolic domains.
    """

    variables: tuple[str, ...]
    domains: Mapping[str, frozenset[Atom]]
    constraints: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        values = [value for domain in self.domains.values() for value in domain]

        if any(isinstance(value, int) for value in values) and not all(isinstance(value, int) for value in values):
            raise CspError('Domains mix integer and symbolic values.')

        if set(self.domains) != set(self.variables) or len(set(self.variables)) != len(self.variables):
            raise CspError(f'Every variable needs exactly one domain: variables {list(self.variables)}, domains {sorted(self.domains)}')

        for number, constraint in enumerate(self.constraints, start=1):
            self._check(number, constraint)

    def _known(self, number: int, variable: str) -> frozenset[Atom]:
        if variable not in self.domains:
            raise CspError(f'Constraint {number} mentions undeclared variable "{variable}".')

        return self.domains[variable]

    def _check(self, number: int, constraint: Constraint) -> None:
        match constraint:
            case UnaryConstraint(variable, allowed):
                outside = allowed - self._known(number, variable)

                if outside:
                    raise CspError(f'Constraint {number} allows {sorted(outside, key=str)} outside the domain of "{variable}".')
            case TableConstraint(left, right, _) | DifferenceConstraint(left, right, _, _) as binary:
                left_domain, right_domain = self._known(number, left), self._known(number, right)

                if left == right:
                    raise CspError(f'Constraint {number} relates "{left}" to itself; write it as a unary constraint.')

                if isinstance(binary, DifferenceConstraint):
                    if not all(isinstance(value, int) for value in left_domain | right_domain):
                        raise CspError(f'Difference constraint {number} needs integer domains.')
                else:
                    outside = {(a, b) for a, b in binary.pairs if a not in left_domain or b not in right_domain}

                    if outside:
                        raise CspError(f'Constraint {number} allows pairs outside the domains: {sorted(outside, key=str)}')

    @property
    def is_integer(self) -> bool:
        return all(isinstance(value, int) for domain in self.domains.values() for value in domain)

    def universe(self) -> Universe:
        """Smallest universe holding every domain value and every difference bound.

        Integer problems get a contiguous range, so `sub` of two values is defined whenever
        it lies between the bounds of a difference constraint. Symbolic values are sorted by name.
        """
        values = frozenset().union(*self.domains.values())

        if not self.is_integer:
            return Universe.symbolic(sorted(values))

        bounds = [bound for _, constraint in self.binary if isinstance(constraint, DifferenceConstraint) for bound in (constraint.low, constraint.high)]
        numbers = [*values, *bounds] or [0]

        return Universe.integer_range(min(numbers), max(numbers))

    @property
    def binary(self) -> tuple[tuple[int, BinaryConstraint], ...]:
        """Binary constraints with their number."""
        return tuple(
            (number, constraint) for number, constraint in enumerate(self.constraints, start=1)
            if not isinstance(constraint, UnaryConstraint)
        )
