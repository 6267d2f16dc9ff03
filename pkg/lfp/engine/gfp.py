from typing import Iterator

from model import (
    UNDEFINED, Body, BodyAnd, BodyForall, Clause, ClauseKind, ConImplies, DefImplies, FormulaError, FunctionEnv,
    Interpretation, Row, Valuation, eval_terms, implications,
)
from oracle import sat_cond


def _instances(body: Body, valuation: Valuation, functions: FunctionEnv) -> Iterator[tuple[ConImplies, Valuation]]:
    match body:
        case ConImplies():
            yield body, valuation
        case BodyForall(var, inner):
            for atom in functions.universe:
                yield from _instances(inner, {**valuation, var: atom}, functions)
        case BodyAnd(left, right):
            yield from _instances(left, valuation, functions)
            yield from _instances(right, valuation, functions)
        case DefImplies():
            raise FormulaError('gfp_iterate expects a constrain clause.')


def gfp_iterate(clause: Clause, rho: Interpretation, functions: FunctionEnv) -> Interpretation:
    """Greatest solution of one constrain layer by iterated deletion.

    Starts with every constrained relation full and deletes each row whose constrain implication
    fails under the current interpretation, until nothing changes. Lower relations are read from `rho`.

    Args:
        clause:
            Constrain clause.
        rho:
            Interpretation with every lower relation solved.
        functions:
            Interpretation of the function symbols.

    Returns:
        `rho` with the constrained relations replaced by their greatest values.
    """
    if clause.kind is not ClauseKind.CONSTRAIN:
        raise FormulaError('gfp_iterate expects a constrain clause.')

    universe = functions.universe
    arities = {implication.head.relation: len(implication.head.args) for implication in implications(clause.body)}
    current: dict[str, set[Row]] = {relation: set(universe.rows(arity)) for relation, arity in arities.items()}

    while True:
        snapshot = rho.with_relations(current)
        violated: list[tuple[str, Row]] = []

        for implication, valuation in _instances(clause.body, {}, functions):
            row = eval_terms(implication.head.args, functions, valuation)

            if row is UNDEFINED or row not in current[implication.head.relation]:
                continue

            if not sat_cond(snapshot, valuation, implication.cond, universe=universe, functions=functions):
                violated.append((implication.head.relation, row))

        if not violated:
            return snapshot

        for relation, row in violated:
            current[relation].discard(row)
