from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .conditions import Condition, NegQuery, Query, condition_free_variables, queries
from .exceptions import FormulaError
from .terms import Term, term_variables


class ClauseKind(Enum):
    DEFINE = 'define'
    CONSTRAIN = 'constrain'


@dataclass(frozen=True)
class Assertion:
    """Defined or constrained occurrence `R(u)`; arguments may be arbitrary terms."""

    relation: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class DefImplies:
    """`cond => R(u)`"""

    cond: Condition
    head: Assertion


@dataclass(frozen=True)
class ConImplies:
    """`R(u) => cond`"""

    head: Assertion
    cond: Condition


@dataclass(frozen=True)
class BodyForall:
    var: str
    body: 'Body'


@dataclass(frozen=True)
class BodyAnd:
    left: 'Body'
    right: 'Body'


Body = DefImplies | ConImplies | BodyForall | BodyAnd


@dataclass(frozen=True)
class Clause:
    """One layer of a formula, `define(def)` or `constrain(con)`.

    Raises:
        FormulaError: If `body` mixes implication shapes or does not match `kind`.
    """

    kind: ClauseKind
    body: Body

    def __post_init__(self) -> None:
        expected = DefImplies if self.kind is ClauseKind.DEFINE else ConImplies

        for implication in implications(self.body):
            if not isinstance(implication, expected):
                raise FormulaError(f'A {self.kind.value} clause can not contain {type(implication).__name__}.')

    @classmethod
    def define(cls, *bodies: Body) -> 'Clause':
        return cls(ClauseKind.DEFINE, conjoin_bodies(*bodies))

    @classmethod
    def constrain(cls, *bodies: Body) -> 'Clause':
        return cls(ClauseKind.CONSTRAIN, conjoin_bodies(*bodies))


def conjoin_bodies(*bodies: Body) -> Body:
    if not bodies:
        raise FormulaError('A clause needs at least one conjunct.')

    result = bodies[-1]

    for body in reversed(bodies[:-1]):
        result = BodyAnd(body, result)

    return result


def forall(variables: str, body: Body) -> Body:
    """Wrap `body` in one `BodyForall` per whitespace separated name, outermost first."""
    for var in reversed(variables.split()):
        body = BodyForall(var, body)

    return body


def implications(body: Body) -> Iterator[DefImplies | ConImplies]:
    match body:
        case DefImplies() | ConImplies():
            yield body
        case BodyForall(_, inner):
            yield from implications(inner)
        case BodyAnd(left, right):
            yield from implications(left)
            yield from implications(right)


def asserted_relations(clause: Clause) -> frozenset[str]:
    return frozenset(implication.head.relation for implication in implications(clause.body))


def used_relations(clause: Clause) -> tuple[frozenset[str], frozenset[str]]:
    """Relations queried positively and negatively by the conditions of `clause`."""
    positive: set[str] = set()
    negative: set[str] = set()

    for implication in implications(clause.body):
        for query in queries(implication.cond):
            match query:
                case Query(relation, _):
                    positive.add(relation)
                case NegQuery(relation, _):
                    negative.add(relation)

    return frozenset(positive), frozenset(negative)


def body_free_variables(body: Body) -> frozenset[str]:
    match body:
        case DefImplies(cond, head) | ConImplies(head, cond):
            head_variables = frozenset().union(*(term_variables(arg) for arg in head.args))
            return condition_free_variables(cond) | head_variables
        case BodyForall(var, inner):
            return body_free_variables(inner) - {var}
        case BodyAnd(left, right):
            return body_free_variables(left) | body_free_variables(right)

