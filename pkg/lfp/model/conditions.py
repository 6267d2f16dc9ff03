from dataclasses import dataclass
from typing import Iterator

from .terms import Term, term_variables


@dataclass(frozen=True)
class Query:
    relation: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class NegQuery:
    relation: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class And:
    left: 'Condition'
    right: 'Condition'


@dataclass(frozen=True)
class Or:
    left: 'Condition'
    right: 'Condition'


@dataclass(frozen=True)
class Exists:
    var: str
    body: 'Condition'


@dataclass(frozen=True)
class Forall:
    var: str
    body: 'Condition'


@dataclass(frozen=True)
class Truth:
    """The constants `true` and `false`; use `TRUE` and `FALSE`."""

    value: bool


TRUE = Truth(True)
FALSE = Truth(False)

Condition = Query | NegQuery | And | Or | Exists | Forall | Truth


def conjoin(*conditions: Condition) -> Condition:
    """Right-nested conjunction, `TRUE` when nothing is given."""
    if not conditions:
        return TRUE

    result = conditions[-1]

    for condition in reversed(conditions[:-1]):
        result = And(condition, result)

    return result


def negate(condition: Condition) -> Condition:
    """Push a negation through `condition` down to its queries (negation normal form)."""
    match condition:
        case Query(relation, args):
            return NegQuery(relation, args)
        case NegQuery(relation, args):
            return Query(relation, args)
        case And(left, right):
            return Or(negate(left), negate(right))
        case Or(left, right):
            return And(negate(left), negate(right))
        case Exists(var, body):
            return Forall(var, negate(body))
        case Forall(var, body):
            return Exists(var, negate(body))
        case Truth(value):
            return Truth(not value)


def queries(condition: Condition) -> Iterator[Query | NegQuery]:
    match condition:
        case Query() | NegQuery():
            yield condition
        case And(left, right) | Or(left, right):
            yield from queries(left)
            yield from queries(right)
        case Exists(_, body) | Forall(_, body):
            yield from queries(body)


def condition_free_variables(condition: Condition) -> frozenset[str]:
    match condition:
        case Query(_, args) | NegQuery(_, args):
            return frozenset().union(*(term_variables(arg) for arg in args))
        case And(left, right) | Or(left, right):
            return condition_free_variables(left) | condition_free_variables(right)
        case Exists(var, body) | Forall(var, body):
            return condition_free_variables(body) - {var}
        case Truth():
            return frozenset()


def condition_depth(condition: Condition) -> int:
    """Maximal number of nested quantifiers along any path of `condition`."""
    match condition:
        case And(left, right) | Or(left, right):
            return max(condition_depth(left), condition_depth(right))
        case Exists(_, body) | Forall(_, body):
            return 1 + condition_depth(body)
        case _:
            return 0
