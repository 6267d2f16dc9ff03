from dataclasses import dataclass
from typing import Iterable, Iterator

from model import (
    UNDEFINED, And, Body, BodyAnd, BodyForall, Clause, ConImplies, Condition, DefImplies, Exists, Forall,
    FormulaError, FunctionEnv, Interpretation, NegQuery, Or, Query, Row, Truth, Universe, Valuation,
    condition_depth, eval_terms,
)

from .symbols import is_complement


@dataclass(frozen=True, order=True)
class GroundAtom:
    """Relation applied to atoms; after grounding it behaves as a nullary predicate."""

    relation: str
    args: Row = ()

    def __str__(self) -> str:
        if not self.args:
            return self.relation

        return f'{self.relation}({", ".join(str(arg) for arg in self.args)})'


@dataclass(frozen=True)
class GroundAnd:
    parts: tuple['GroundCondition', ...]


@dataclass(frozen=True)
class GroundOr:
    parts: tuple['GroundCondition', ...]


# Constants are folded away, so `True` only survives as a whole body and `False` never does.
GroundCondition = GroundAtom | GroundAnd | GroundOr | bool


def ground_and(parts: Iterable[GroundCondition]) -> GroundCondition:
    kept: list[GroundCondition] = []

    for part in parts:
        if part is False:
            return False

        if part is True:
            continue

        kept.extend(part.parts if isinstance(part, GroundAnd) else (part, ))

    if not kept:
        return True

    return kept[0] if len(kept) == 1 else GroundAnd(tuple(kept))


def ground_or(parts: Iterable[GroundCondition]) -> GroundCondition:
    kept: list[GroundCondition] = []

    for part in parts:
        if part is True:
            return True

        if part is False:
            continue

        kept.extend(part.parts if isinstance(part, GroundOr) else (part, ))

    if not kept:
        return False

    return kept[0] if len(kept) == 1 else GroundOr(tuple(kept))


def condition_cost(cond: GroundCondition) -> int:
    """Symbols count 1, each conjunction 1 and each disjunction 6."""
    match cond:
        case GroundAtom():
            return 1
        case GroundAnd(parts):
            return sum(condition_cost(part) for part in parts) + len(parts) - 1
        case GroundOr(parts):
            return sum(condition_cost(part) for part in parts) + 6 * (len(parts) - 1)
        case _:
            return 0


@dataclass(frozen=True)
class GroundDefinition:
    """`body => head` with no variables left."""

    body: GroundCondition
    head: GroundAtom


@dataclass(frozen=True)
class GroundFragment:
    definitions: tuple[GroundDefinition, ...]

    def __len__(self) -> int:
        return len(self.definitions)

    def cost(self) -> int:
        return sum(condition_cost(definition.body) + 1 for definition in self.definitions)


def ground(
    clause: Clause,
    universe: Universe,
    functions: FunctionEnv,
    known: Interpretation,
    current: frozenset[str],
) -> GroundFragment:
    """Instantiate every quantifier of a define clause over the universe.

    Queries to relations outside `current` are answered from `known` right away and folded,
    so the remaining bodies only mention relations of `current`, positively.
    Instances whose body folds to false, or whose head is undefined, are dropped.

    Args:
        clause:
            Define clause; constrain clauses are dualized first.
        universe:
            Range of every quantifier.
        functions:
            Interpretation of the function symbols.
        known:
            Solved lower relations.
        current:
            Relations asserted by `clause`.

    Returns:
        `GroundFragment` of size O(|U|^k |clause|), k being the nesting depth of `clause`.

    Raises:
        FormulaError: If `clause` is a constrain clause or negatively queries a relation of `current`.
    """
    def ground_cond(cond: Condition, valuation: Valuation) -> GroundCondition:
        match cond:
            case Query(relation, args):
                row = eval_terms(args, functions, valuation)

                if row is UNDEFINED:
                    # A complement query stands for a negative query, which holds on undefined arguments.
                    return is_complement(relation)

                if relation in current:
                    return GroundAtom(relation, row)

                return row in known[relation]
            case NegQuery(relation, args):
                if relation in current:
                    raise FormulaError(f'Relation "{relation}" is negatively queried in the layer asserting it.')

                row = eval_terms(args, functions, valuation)
                return row is UNDEFINED or row not in known[relation]
            case And(left, right):
                return ground_and((ground_cond(left, valuation), ground_cond(right, valuation)))
            case Or(left, right):
                return ground_or((ground_cond(left, valuation), ground_cond(right, valuation)))
            case Exists(var, body):
                return ground_or(ground_cond(body, {**valuation, var: atom}) for atom in universe)
            case Forall(var, body):
                return ground_and(ground_cond(body, {**valuation, var: atom}) for atom in universe)
            case Truth(value):
                return value

    def ground_body(body: Body, valuation: Valuation) -> Iterator[GroundDefinition]:
        match body:
            case DefImplies(cond, head):
                grounded = ground_cond(cond, valuation)

                if grounded is False:
                    return

                row = eval_terms(head.args, functions, valuation)

                if row is not UNDEFINED:
                    yield GroundDefinition(grounded, GroundAtom(head.relation, row))
            case ConImplies():
                raise FormulaError('Constrain clauses must be dualized before grounding.')
            case BodyForall(var, inner):
                for atom in universe:
                    yield from ground_body(inner, {**valuation, var: atom})
            case BodyAnd(left, right):
                yield from ground_body(left, valuation)
                yield from ground_body(right, valuation)

    return GroundFragment(tuple(ground_body(clause.body, {})))


def nesting_depth(clause: Clause) -> int:
    """Maximal nesting depth of quantifiers in `clause`, clause and condition quantifiers alike."""
    def depth(body: Body) -> int:
        match body:
            case DefImplies(cond, _) | ConImplies(_, cond):
                return condition_depth(cond)
            case BodyForall(_, inner):
                return 1 + depth(inner)
            case BodyAnd(left, right):
                return max(depth(left), depth(right))

    return depth(clause.body)
