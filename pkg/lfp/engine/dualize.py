from dataclasses import dataclass
from typing import Mapping

from model import (
    RESERVED_PREFIX, TRUE, And, Assertion, Body, BodyAnd, BodyForall, Clause, ClauseKind, ConImplies, Condition,
    DefImplies, Exists, Forall, FormulaError, NegQuery, Or, Query, Variable, asserted_relations, conjoin_bodies,
    negate,
)

from .symbols import complement_symbol


@dataclass(frozen=True)
class DualLayers:
    """The two define layers replacing one constrain layer.

    Attributes:
        complement:
            Layer asserting the complement relations (the g translation).
        recovery:
            Layer asserting the constrained relations from their complements (the h translation).
        complements:
            Generated complement symbol by constrained relation.
    """

    complement: Clause
    recovery: Clause
    complements: Mapping[str, str]


def dualize(clause: Clause) -> DualLayers:
    """Turn a constrain clause into two define clauses computing the same greatest solution.

    Every `R(u) => cond` becomes `not cond[R'co(v) / not R'(v)] => Rco(u)` in the first layer, with the
    negation pushed down to the queries, and `cond[true / R'(v)] and not Rco(u) => R(u)` in the second,
    where `R'` ranges over the relations constrained by `clause`. Quantifier and conjunction structure is kept.

    Args:
        clause:
            Constrain clause of a stratified formula.

    Returns:
        `DualLayers` with the complement layer first.

    Raises:
        FormulaError: If `clause` is not a constrain clause.
    """
    if clause.kind is not ClauseKind.CONSTRAIN:
        raise FormulaError('Only constrain clauses can be dualized.')

    constrained = asserted_relations(clause)
    complements = {relation: complement_symbol(relation) for relation in sorted(constrained)}

    def to_complement(cond: Condition) -> Condition:
        match cond:
            case NegQuery(relation, args) if relation in complements:
                return Query(complements[relation], args)
            case And(left, right):
                return And(to_complement(left), to_complement(right))
            case Or(left, right):
                return Or(to_complement(left), to_complement(right))
            case Exists(var, body):
                return Exists(var, to_complement(body))
            case Forall(var, body):
                return Forall(var, to_complement(body))
            case _:
                return cond

    def relax(cond: Condition) -> Condition:
        match cond:
            case Query(relation, _) if relation in complements:
                return TRUE
            case And(left, right):
                return And(relax(left), relax(right))
            case Or(left, right):
                return Or(relax(left), relax(right))
            case Exists(var, body):
                return Exists(var, relax(body))
            case Forall(var, body):
                return Forall(var, relax(body))
            case _:
                return cond

    def g(body: Body) -> Body:
        match body:
            case ConImplies(head, cond):
                return DefImplies(to_complement(negate(cond)), Assertion(complements[head.relation], head.args))
            case BodyForall(var, inner):
                return BodyForall(var, g(inner))
            case BodyAnd(left, right):
                return BodyAnd(g(left), g(right))

    def h(body: Body) -> Body:
        match body:
            case ConImplies(head, cond):
                guard = NegQuery(complements[head.relation], head.args)
                return DefImplies(And(relax(cond), guard), head)
            case BodyForall(var, inner):
                return BodyForall(var, h(inner))
            case BodyAnd(left, right):
                return BodyAnd(h(left), h(right))

    return DualLayers(Clause(ClauseKind.DEFINE, g(clause.body)), Clause(ClauseKind.DEFINE, h(clause.body)), complements)


def completed_recovery(layers: DualLayers, arities: Mapping[str, int]) -> Clause:
    """Recovery layer extended with `forall x..: not Rco(x..) => R(x..)` for every constrained `R`.

    The plain recovery layer only re-asserts rows that occur as constrained heads; the
    extra conjuncts add the rows no clause constrains, which belong to the greatest solution.
    """
    extra = []

    for relation, complement in layers.complements.items():
        names = tuple(f'{RESERVED_PREFIX}x{position}' for position in range(arities[relation]))
        variables = tuple(Variable(name) for name in names)
        body: Body = DefImplies(NegQuery(complement, variables), Assertion(relation, variables))

        for name in reversed(names):
            body = BodyForall(name, body)

        extra.append(body)

    return Clause(ClauseKind.DEFINE, conjoin_bodies(layers.recovery.body, *extra))
