from typing import Mapping

from sortedcontainers import SortedSet

from model import (
    TRUE, And, Assertion, Atom, Clause, ConImplies, DefImplies, Exists, FunctionApp, FunctionEnv, Interpretation,
    LayeredFormula, Query, Variable, forall,
)
from frontends.base import BaseFrontend

from .decoder import CspDecoder
from .problem import BinaryConstraint, Csp, DifferenceConstraint, TableConstraint, UnaryConstraint

Domains = dict[str, frozenset[Atom]]


def domain_relation(variable: str) -> str:
    return f'D_{variable}'


def initial_relation(variable: str) -> str:
    return f'Dom_{variable}'


def constraint_relation(number: int) -> str:
    return f'C_{number}'


def _constant(value: Atom) -> FunctionApp:
    return FunctionApp(str(value))


def csp_formula(csp: Csp, arithmetic: bool = True) -> LayeredFormula:
    """Compile a binary CSP so that the least model holds its maximal arc consistent domains.

    Every variable `v` gets a constrained relation `D_v`, bounded by its initial domain `Dom_v`
    (a fact) and by one conjunct per constraint end:
    `forall x: D_i(x) => exists y: D_j(y) & C_k(x, y)` and the symmetric one.

    With `arithmetic` the unary constraints and the difference constraints are populated by a
    define layer: unary ones by listing their values, difference ones through the allowed
    differences `C_k(d)` queried as `C_k(sub(y, x))`. Without it every constraint becomes an
    explicit fact table. Explicit `allow` tables are facts either way.
    """
    universe = csp.universe()
    x, y = Variable('x'), Variable('y')
    signature: dict[str, int] = {}
    facts: dict[str, list] = {}
    definitions = []
    constraints = []

    for variable in csp.variables:
        signature[domain_relation(variable)] = 1
        signature[initial_relation(variable)] = 1
        facts[initial_relation(variable)] = [(value, ) for value in csp.domains[variable]]
        constraints.append(forall('x', ConImplies(Assertion(domain_relation(variable), (x, )), Query(initial_relation(variable), (x, )))))

    for number, constraint in enumerate(csp.constraints, start=1):
        relation = constraint_relation(number)

        match constraint:
            case UnaryConstraint(variable, allowed):
                signature[relation] = 1

                if arithmetic and allowed:
                    definitions.extend(DefImplies(TRUE, Assertion(relation, (_constant(value), ))) for value in sorted(allowed, key=universe.index))
                else:
                    facts[relation] = [(value, ) for value in allowed]

                constraints.append(forall('x', ConImplies(Assertion(domain_relation(variable), (x, )), Query(relation, (x, )))))
            case DifferenceConstraint(left, right, low, high) if arithmetic:
                signature[relation] = 1

                if low <= high:
                    definitions.extend(DefImplies(TRUE, Assertion(relation, (_constant(value), ))) for value in range(low, high + 1))
                else:
                    facts[relation] = []

                allowed = Query(relation, (FunctionApp('sub', (y, x)), ))
                constraints.extend(_support(domain_relation(left), domain_relation(right), allowed))
            case TableConstraint() | DifferenceConstraint():
                signature[relation] = 2
                facts[relation] = _pairs(csp, constraint)
                constraints.extend(_support(domain_relation(constraint.left), domain_relation(constraint.right), Query(relation, (x, y))))

    layers = (Clause.define(*definitions), ) if definitions else ()
    layers += (Clause.constrain(*constraints), )

    return LayeredFormula(universe, signature, FunctionEnv(universe), Interpretation(facts), layers)


def _support(left: str, right: str, allowed: Query):
    """Both arc conjuncts of a binary constraint whose allowed pairs are `allowed(x, y)`."""
    x, y = Variable('x'), Variable('y')

    return (
        forall('x', ConImplies(Assertion(left, (x, )), Exists('y', And(Query(right, (y, )), allowed)))),
        forall('y', ConImplies(Assertion(right, (y, )), Exists('x', And(Query(left, (x, )), allowed)))),
    )


def _pairs(csp: Csp, constraint: BinaryConstraint) -> list[tuple[Atom, Atom]]:
    if isinstance(constraint, TableConstraint):
        return list(constraint.pairs)

    return [
        (a, b) for a in csp.domains[constraint.left] for b in csp.domains[constraint.right]
        if constraint.allows(a, b)
    ]


def ac3_oracle(csp: Csp) -> Domains:
    """Maximal arc consistent sub-domains by the AC-3 revise/worklist algorithm.

    Unary constraints are applied once up front. Arcs are `(constraint number, end)`; revising
    an arc removes the values of that end without support at the other end. The loop runs to
    completion even when a domain becomes empty.
    """
    domains: dict[str, set[Atom]] = {variable: set(csp.domains[variable]) for variable in csp.variables}

    for constraint in csp.constraints:
        if isinstance(constraint, UnaryConstraint):
            domains[constraint.variable] &= constraint.allowed

    binary: Mapping[int, BinaryConstraint] = dict(csp.binary)
    worklist = SortedSet((number, end) for number in binary for end in (0, 1))

    def revise(number: int, end: int) -> bool:
        constraint = binary[number]

        if end == 0:
            unsupported = {a for a in domains[constraint.left] if not any(constraint.allows(a, b) for b in domains[constraint.right])}
            domains[constraint.left] -= unsupported
        else:
            unsupported = {b for b in domains[constraint.right] if not any(constraint.allows(a, b) for a in domains[constraint.left])}
            domains[constraint.right] -= unsupported

        return bool(unsupported)

    while worklist:
        number, end = worklist.pop(0)

        if not revise(number, end):
            continue

        constraint = binary[number]
        revised = constraint.left if end == 0 else constraint.right

        for other, candidate in binary.items():
            if other == number:
                continue

            if candidate.right == revised:
                worklist.add((other, 0))

            if candidate.left == revised:
                worklist.add((other, 1))

    return {variable: frozenset(values) for variable, values in domains.items()}


class CspFrontend(BaseFrontend[Csp, Domains]):
    """Arc consistency of binary constraint problems."""

    decoder: CspDecoder = CspDecoder()

    def __init__(self, problem: Csp, arithmetic: bool = True) -> None:
        super().__init__(problem)
        self.arithmetic = arithmetic

    def compile(self) -> LayeredFormula:
        return csp_formula(self.problem, self.arithmetic)

    def extract(self, rho: Interpretation) -> Domains:
        return {variable: frozenset(row[0] for row in rho[domain_relation(variable)]) for variable in self.problem.variables}

    def oracle(self) -> Domains:
        return ac3_oracle(self.problem)
