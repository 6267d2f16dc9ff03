import itertools
from dataclasses import dataclass, field
from typing import Mapping

import networkx as nx

from frontends.exceptions import KripkeError


@dataclass(frozen=True)
class Kripke:
    """Finite transition system with labelled states.

    Attributes:
        states:
            State names, in declaration order.
        transitions:
            Pairs `(state, successor)`.
        labels:
            States labelled with each atomic proposition; the keys are the propositions `AP`.
        initial:
            Initial states, possibly none.

    Raises:
        KripkeError: If some state has no successor, or transitions, labels or initial states mention unknown states.
    """

    states: tuple[str, ...]
    transitions: frozenset[tuple[str, str]]
    labels: Mapping[str, frozenset[str]] = field(default_factory=dict)
    initial: frozenset[str] = frozenset()
    graph: nx.DiGraph = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.states)) != len(self.states):
            raise KripkeError(f'Duplicate states in {list(self.states)}')

        graph = nx.DiGraph()
        graph.add_nodes_from(self.states)

        for source, target in self.transitions:
            if source not in graph or target not in graph:
                raise KripkeError(f'Transition ({source}, {target}) mentions an unknown state.')

            graph.add_edge(source, target)

        for proposition, states in self.labels.items():
            unknown = set(states) - set(self.states)

            if unknown:
                raise KripkeError(f'Label "{proposition}" is put on unknown states {sorted(unknown)}')

        unknown = set(self.initial) - set(self.states)

        if unknown:
            raise KripkeError(f'Unknown initial states {sorted(unknown)}')

        terminal = [state for state in self.states if graph.out_degree(state) == 0]

        if terminal:
            raise KripkeError(f'Terminal states are not allowed: {terminal}')

        object.__setattr__(self, 'graph', graph)

    @property
    def propositions(self) -> tuple[str, ...]:
        return tuple(self.labels)

    def successors(self, state: str) -> frozenset[str]:
        return frozenset(self.graph.successors(state))


def bakery_state(location1: int, location2: int, ticket1: int, ticket2: int) -> str:
    return f'b{location1}{location2}_{ticket1}_{ticket2}'


def _bakery_moves(state: tuple[int, int, int, int], bound: int) -> list[tuple[int, int, int, int]]:
    """Interleaved moves of both processes; locations 1 noncritical, 2 waiting, 3 critical."""
    moves = []

    for me in (0, 1):
        other = 1 - me
        locations, tickets = list(state[:2]), list(state[2:])

        match locations[me]:
            case 1:
                tickets[me] = min(tickets[other] + 1, bound)
                locations[me] = 2
            case 2:
                if tickets[other] == 0 or tickets[me] < tickets[other]:
                    locations[me] = 3
            case 3:
                tickets[me] = 0
                locations[me] = 1

        moves.append((*locations, *tickets))

    return moves


def bakery_builder(ticket_bound: int) -> Kripke:
    """Interleaved product of the two Bakery processes, reachable part only.

    Process i draws ticket `x_i := x_j + 1` (clamped at `ticket_bound`), waits until
    `x_j = 0 or x_i < x_j`, enters the critical section and resets `x_i := 0`. A waiting
    process whose guard is false loops in place. States are labelled `noncrit_i`, `wait_i`
    and `crit_i`; the initial state has both processes noncritical with both tickets 0.

    Raises:
        KripkeError: If `ticket_bound` is below 2.
    """
    if ticket_bound < 2:
        raise KripkeError(f'Ticket bound must be at least 2, got {ticket_bound}.')

    product = nx.DiGraph()
    values = range(ticket_bound + 1)

    for state in itertools.product((1, 2, 3), (1, 2, 3), values, values):
        for move in _bakery_moves(state, ticket_bound):
            product.add_edge(state, move)

    start = (1, 1, 0, 0)
    reachable = product.subgraph(nx.descendants(product, start) | {start})
    ordered = sorted(reachable.nodes)

    transitions = {(bakery_state(*source), bakery_state(*target)) for source, target in reachable.edges}
    transitions |= {(bakery_state(*state), bakery_state(*state)) for state in ordered if reachable.out_degree(state) == 0}

    labels = {}

    for process in (1, 2):
        for location, name in ((1, 'noncrit'), (2, 'wait'), (3, 'crit')):
            labels[f'{name}{process}'] = frozenset(bakery_state(*state) for state in ordered if state[process - 1] == location)

    return Kripke(
        states=tuple(bakery_state(*state) for state in ordered),
        transitions=frozenset(transitions),
        labels=labels,
        initial=frozenset({bakery_state(*start)}),
    )
