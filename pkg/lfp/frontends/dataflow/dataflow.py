from collections import deque

from model import (
    And, Assertion, Clause, ConImplies, DefImplies, FunctionApp, FunctionEnv, Interpretation, LayeredFormula,
    NegQuery, Or, Query, Universe, Variable, forall,
)
from frontends.base import BaseFrontend

from .cfg import Cfg, Direction, Modality
from .decoder import CfgDecoder

AnalysisResult = dict[str, frozenset[str]]


def _flow_edges(cfg: Cfg, direction: Direction) -> list[tuple[str, str]]:
    """Edges in the direction information flows."""
    if direction is Direction.FORWARD:
        return list(cfg.edges)

    return [(target, source) for source, target in cfg.edges]


def _boundary(cfg: Cfg, direction: Direction) -> str:
    return cfg.entry if direction is Direction.FORWARD else cfg.exit


def _variable_name(universe: Universe) -> str:
    name = 'x'

    while name in universe:
        name += "'"

    return name


def dataflow_formula(cfg: Cfg, direction: Direction, modality: Modality) -> LayeredFormula:
    """Compile a bit-vector analysis into a one-layer formula over `A(node, item)`.

    Information flows along `_flow_edges`; the node it flows into applies its own transfer
    function. May analyses are a define layer seeded with `iota` at the boundary node, must
    analyses a constrain layer bounded by `iota` at the boundary node.
    """
    universe = Universe.symbolic(cfg.nodes + cfg.items)
    x = _variable_name(universe)
    var = Variable(x)

    def a(node: str) -> tuple:
        return ('A', (FunctionApp(node), var))

    def transferred(source: str, target: str):
        node = (FunctionApp(target), var)
        return Or(And(Query(*a(source)), NegQuery('Kill', node)), Query('Gen', node))

    boundary = _boundary(cfg, direction)
    bodies = []

    if modality is Modality.MAY:
        bodies.append(forall(x, DefImplies(Query('Iota', (var, )), Assertion(*a(boundary)))))

        for source, target in _flow_edges(cfg, direction):
            bodies.append(forall(x, DefImplies(transferred(source, target), Assertion(*a(target)))))

        clause = Clause.define(*bodies)
    else:
        bodies.append(forall(x, ConImplies(Assertion(*a(boundary)), Query('Iota', (var, )))))

        for source, target in _flow_edges(cfg, direction):
            bodies.append(forall(x, ConImplies(Assertion(*a(target)), transferred(source, target))))

        clause = Clause.constrain(*bodies)

    facts = Interpretation({
        'N': [(node, ) for node in cfg.nodes],
        'E': list(cfg.edges),
        'Kill': [(node, item) for node in cfg.nodes for item in cfg.kill_of(node)],
        'Gen': [(node, item) for node in cfg.nodes for item in cfg.gen_of(node)],
        'Iota': [(item, ) for item in cfg.iota],
    })
    signature = {'A': 2, 'N': 1, 'E': 2, 'Kill': 2, 'Gen': 2, 'Iota': 1}

    return LayeredFormula(universe, signature, FunctionEnv(universe), facts, (clause, ))


def dataflow_oracle(cfg: Cfg, direction: Direction, modality: Modality) -> AnalysisResult:
    """Classical round-robin worklist solver for the same equations as `dataflow_formula`.

    May analyses start from the empty set and join with union; must analyses start from
    every item and join with intersection, so both reach the extremal solution.
    """
    boundary = _boundary(cfg, direction)
    incoming: dict[str, list[str]] = {node: [] for node in cfg.nodes}
    outgoing: dict[str, list[str]] = {node: [] for node in cfg.nodes}

    for source, target in _flow_edges(cfg, direction):
        incoming[target].append(source)
        outgoing[source].append(target)

    top = frozenset(cfg.items)
    start = frozenset() if modality is Modality.MAY else top
    values: AnalysisResult = {node: start for node in cfg.nodes}
    values[boundary] = cfg.iota
    worklist = deque(node for node in cfg.nodes if node != boundary)
    queued = set(worklist)

    while worklist:
        node = worklist.popleft()
        queued.discard(node)
        contributions = [cfg.transfer(node, values[source]) for source in incoming[node]]

        if modality is Modality.MAY:
            value = frozenset().union(*contributions)
        else:
            value = frozenset.intersection(*contributions) if contributions else top

        if value != values[node]:
            values[node] = value

            for successor in outgoing[node]:
                if successor != boundary and successor not in queued:
                    worklist.append(successor)
                    queued.add(successor)

    return values


class DataflowFrontend(BaseFrontend[Cfg, AnalysisResult]):
    """Bit-vector analyses on a control flow graph, in any direction and modality."""

    decoder: CfgDecoder = CfgDecoder()

    def __init__(self, problem: Cfg, direction: Direction = Direction.FORWARD, modality: Modality = Modality.MAY) -> None:
        super().__init__(problem)
        self.direction = direction
        self.modality = modality

    def compile(self) -> LayeredFormula:
        return dataflow_formula(self.problem, self.direction, self.modality)

    def extract(self, rho: Interpretation) -> AnalysisResult:
        items = set(self.problem.items)
        result: dict[str, set[str]] = {node: set() for node in self.problem.nodes}

        for node, item in rho['A']:
            if node in result and item in items:
                result[node].add(item)

        return {node: frozenset(values) for node, values in result.items()}

    def oracle(self) -> AnalysisResult:
        return dataflow_oracle(self.problem, self.direction, self.modality)
