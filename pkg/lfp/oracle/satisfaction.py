"""Direct rendition of the LFP satisfaction relations.

Quantifiers are enumerated over the whole universe, so evaluation costs |U|^depth.
These functions are the reference the engine is tested against; they never solve anything.
"""

from model import (
    UNDEFINED, And, Body, BodyAnd, BodyForall, Clause, ConImplies, Condition, DefImplies, Exists, Forall,
    FunctionEnv, Interpretation, LayeredFormula, NegQuery, Or, Query, Truth, Universe, Valuation, eval_terms,
)


def sat_cond(
    rho: Interpretation,
    valuation: Valuation,
    cond: Condition,
    *,
    universe: Universe,
    functions: FunctionEnv | None = None,
) -> bool:
    """Decide `(rho, valuation) |= cond`.

    Args:
        rho:
            Interpretation of every relation `cond` queries.
        valuation:
            Binding of the free variables of `cond`.
        cond:
            Condition to evaluate.
        universe:
            Range of `Exists` and `Forall`.
        functions:
            Needed only when query arguments contain function applications or constants.

    Returns:
        Truth value of `cond`. A query whose arguments are undefined is false; its negation is true.

    Raises:
        SignatureError: If `cond` queries a relation `rho` does not interpret.
    """
    functions = functions or FunctionEnv(universe)

    def holds(cond: Condition, valuation: Valuation) -> bool:
        match cond:
            case Query(relation, args):
                row = eval_terms(args, functions, valuation)
                return row is not UNDEFINED and row in rho[relation]
            case NegQuery(relation, args):
                row = eval_terms(args, functions, valuation)
                return row is UNDEFINED or row not in rho[relation]
            case And(left, right):
                return holds(left, valuation) and holds(right, valuation)
            case Or(left, right):
                return holds(left, valuation) or holds(right, valuation)
            case Exists(var, body):
                return any(holds(body, {**valuation, var: atom}) for atom in universe)
            case Forall(var, body):
                return all(holds(body, {**valuation, var: atom}) for atom in universe)
            case Truth(value):
                return value

    return holds(cond, valuation)


def sat_body(rho: Interpretation, functions: FunctionEnv, valuation: Valuation, body: Body) -> bool:
    universe = functions.universe

    match body:
        case DefImplies(cond, head):
            if not sat_cond(rho, valuation, cond, universe=universe, functions=functions):
                return True

            row = eval_terms(head.args, functions, valuation)
            return row is UNDEFINED or row in rho[head.relation]
        case ConImplies(head, cond):
            row = eval_terms(head.args, functions, valuation)

            if row is UNDEFINED or row not in rho[head.relation]:
                return True

            return sat_cond(rho, valuation, cond, universe=universe, functions=functions)
        case BodyForall(var, inner):
            return all(sat_body(rho, functions, {**valuation, var: atom}, inner) for atom in universe)
        case BodyAnd(left, right):
            return sat_body(rho, functions, valuation, left) and sat_body(rho, functions, valuation, right)


def sat_clause(rho: Interpretation, functions: FunctionEnv, valuation: Valuation, clause: Clause) -> bool:
    """Decide `(rho, functions, valuation) |= clause`.

    An assertion whose arguments are undefined asserts nothing in a define clause and
    is vacuously satisfied in a constrain clause.
    """
    return sat_body(rho, functions, valuation, clause.body)


def layer_report(rho: Interpretation, formula: LayeredFormula) -> list[tuple[str, bool]]:
    """Satisfaction of the facts and of each layer separately, labelled `facts`, `layer 1`, ..."""
    facts_hold = all(formula.facts[symbol] <= rho[symbol] for symbol in formula.facts)
    report = [('facts', facts_hold)]

    for index, clause in enumerate(formula.layers, start=1):
        report.append((f'layer {index}', sat_clause(rho, formula.functions, {}, clause)))

    return report


def sat_formula(rho: Interpretation, formula: LayeredFormula) -> bool:
    """Every layer holds and `rho` contains the facts on every rank-0 relation."""
    return all(holds for _, holds in layer_report(rho, formula))
