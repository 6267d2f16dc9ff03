from model import (
    TRUE, And, Assertion, Clause, ConImplies, DefImplies, Exists, Forall, FunctionEnv, Interpretation,
    LayeredFormula, NegQuery, Or, Query, Universe, Variable, asserted_relations, forall,
)
from frontends.base import BaseFrontend
from frontends.exceptions import CtlError

from .decoder import KripkeDecoder
from .formula import (
    AllGlobally, AllNext, AllUntil, Atomic, CtlAnd, CtlFormula, CtlNot, CtlTrue, ExistsGlobally, ExistsNext,
    ExistsUntil, atomic_propositions, subformulas,
)
from .kripke import Kripke

S, NEXT = Variable('s'), Variable('t')


def label_relation(proposition: str) -> str:
    return f'L_{proposition}'


def _check_propositions(phi: CtlFormula, ts: Kripke) -> None:
    unknown = atomic_propositions(phi) - set(ts.propositions)

    if unknown:
        raise CtlError(f'Unknown atomic propositions {sorted(unknown)}; the system knows {sorted(ts.propositions)}')


def _sat(relation: str, var: Variable = S) -> Query:
    return Query(relation, (var, ))


def _some_successor(relation: str) -> Exists:
    return Exists('t', And(Query('T', (S, NEXT)), _sat(relation, NEXT)))


def _all_successors(relation: str) -> Forall:
    return Forall('t', Or(NegQuery('T', (S, NEXT)), _sat(relation, NEXT)))


def ctl_compile(phi: CtlFormula, ts: Kripke) -> LayeredFormula:
    """Compile global model checking of `phi` on `ts` into one layer per distinct subformula.

    Subformulas are numbered in postorder; subformula n gets the relation `Sat<n>` over states.
    Layers of `EG` and `AG` are constrain layers, all others define layers. `T` and the
    label relations `L_<a>` are facts. The relation of `phi` itself is `top_relation(...)`.

    Raises:
        CtlError: If `phi` mentions a proposition `ts` does not know.
    """
    _check_propositions(phi, ts)

    ordered = subformulas(phi)
    names = {formula: f'Sat{number}' for number, formula in enumerate(ordered, start=1)}
    layers = []

    def define(cond, relation: str):
        return forall('s', DefImplies(cond, Assertion(relation, (S, ))))

    def constrain(relation: str, cond):
        return forall('s', ConImplies(Assertion(relation, (S, )), cond))

    for formula in ordered:
        sat = names[formula]

        match formula:
            case CtlTrue():
                layers.append(Clause.define(define(TRUE, sat)))
            case Atomic(name):
                layers.append(Clause.define(define(_sat(label_relation(name)), sat)))
            case CtlAnd(left, right):
                layers.append(Clause.define(define(And(_sat(names[left]), _sat(names[right])), sat)))
            case CtlNot(operand):
                layers.append(Clause.define(define(NegQuery(names[operand], (S, )), sat)))
            case ExistsNext(operand):
                layers.append(Clause.define(define(_some_successor(names[operand]), sat)))
            case AllNext(operand):
                layers.append(Clause.define(define(_all_successors(names[operand]), sat)))
            case ExistsUntil(left, right):
                layers.append(Clause.define(
                    define(_sat(names[right]), sat),
                    define(And(_sat(names[left]), _some_successor(sat)), sat),
                ))
            case AllUntil(left, right):
                layers.append(Clause.define(
                    define(_sat(names[right]), sat),
                    define(And(_sat(names[left]), _all_successors(sat)), sat),
                ))
            case ExistsGlobally(operand):
                layers.append(Clause.constrain(constrain(sat, _sat(names[operand])), constrain(sat, _some_successor(sat))))
            case AllGlobally(operand):
                layers.append(Clause.constrain(constrain(sat, _sat(names[operand])), constrain(sat, _all_successors(sat))))

    universe = Universe.symbolic(ts.states)
    signature = {'T': 2, **{label_relation(proposition): 1 for proposition in ts.propositions}, **{name: 1 for name in names.values()}}
    facts = Interpretation({
        'T': ts.transitions,
        **{label_relation(proposition): [(state, ) for state in states] for proposition, states in ts.labels.items()},
    })

    return LayeredFormula(universe, signature, FunctionEnv(universe), facts, tuple(layers))


def top_relation(formula: LayeredFormula) -> str:
    """Relation asserted by the last layer of a compiled CTL formula."""
    (relation, ) = asserted_relations(formula.layers[-1])
    return relation


def ctl_oracle(phi: CtlFormula, ts: Kripke) -> frozenset[str]:
    """States of `ts` satisfying `phi`, by explicit fixpoint iteration on the state graph.

    Raises:
        CtlError: If `phi` mentions a proposition `ts` does not know.
    """
    _check_propositions(phi, ts)

    states = frozenset(ts.states)
    successors = {state: ts.successors(state) for state in ts.states}

    def least(base: frozenset[str], allowed: frozenset[str], step) -> frozenset[str]:
        result = base

        while True:
            grown = result | {state for state in allowed if step(successors[state], result)}

            if grown == result:
                return result

            result = grown

    def greatest(start: frozenset[str], step) -> frozenset[str]:
        result = start

        while True:
            shrunk = frozenset(state for state in result if step(successors[state], result))

            if shrunk == result:
                return result

            result = shrunk

    def some(targets: frozenset[str], within: frozenset[str]) -> bool:
        return bool(targets & within)

    def every(targets: frozenset[str], within: frozenset[str]) -> bool:
        return targets <= within

    def sat(formula: CtlFormula) -> frozenset[str]:
        match formula:
            case CtlTrue():
                return states
            case Atomic(name):
                return frozenset(ts.labels[name])
            case CtlNot(operand):
                return states - sat(operand)
            case CtlAnd(left, right):
                return sat(left) & sat(right)
            case ExistsNext(operand):
                target = sat(operand)
                return frozenset(state for state in states if some(successors[state], target))
            case AllNext(operand):
                target = sat(operand)
                return frozenset(state for state in states if every(successors[state], target))
            case ExistsUntil(left, right):
                return least(sat(right), sat(left), some)
            case AllUntil(left, right):
                return least(sat(right), sat(left), every)
            case ExistsGlobally(operand):
                return greatest(sat(operand), some)
            case AllGlobally(operand):
                return greatest(sat(operand), every)

    return sat(phi)


class CtlFrontend(BaseFrontend[Kripke, frozenset[str]]):
    """Global CTL model checking of one formula on a transition system."""

    decoder: KripkeDecoder = KripkeDecoder()

    def __init__(self, problem: Kripke, formula: CtlFormula) -> None:
        super().__init__(problem)
        self.formula = formula

    def compile(self) -> LayeredFormula:
        return ctl_compile(self.formula, self.problem)

    def extract(self, rho: Interpretation) -> frozenset[str]:
        relation = f'Sat{len(subformulas(self.formula))}'
        return frozenset(row[0] for row in rho[relation])

    def oracle(self) -> frozenset[str]:
        return ctl_oracle(self.formula, self.problem)
