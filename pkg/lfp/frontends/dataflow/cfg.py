from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

import networkx as nx

from frontends.exceptions import CfgError


class Direction(Enum):
    FORWARD = 'fwd'
    BACKWARD = 'bwd'


class Modality(Enum):
    MAY = 'may'
    MUST = 'must'


@dataclass(frozen=True)
class Cfg:
    """Control flow graph of a bit-vector analysis.

    Attributes:
        nodes:
            Node names, in declaration order.
        edges:
            Directed edges `(source, target)`.
        items:
            Item universe of the analysis, disjoint from the node names.
        kill:
            Items killed by each node; nodes without an entry kill nothing.
        gen:
            Items generated by each node; nodes without an entry generate nothing.
        iota:
            Initial information at the entry (forward) or exit (backward) node.
        entry:
            The only node without incoming edges.
        exit:
            The only node without outgoing edges.

    Raises:
        CfgError: If entry or exit is missing or not unique, an edge mentions an unknown node,
            or kill, gen and iota mention unknown items.
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    items: tuple[str, ...] = ()
    kill: Mapping[str, frozenset[str]] = field(default_factory=dict)
    gen: Mapping[str, frozenset[str]] = field(default_factory=dict)
    iota: frozenset[str] = frozenset()
    graph: nx.DiGraph = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise CfgError(f'Duplicate nodes in {list(self.nodes)}')

        clashes = set(self.nodes) & set(self.items)

        if clashes:
            raise CfgError(f'Names used both as node and item: {sorted(clashes)}')

        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)

        for source, target in self.edges:
            for node in (source, target):
                if node not in graph:
                    raise CfgError(f'Edge ({source}, {target}) mentions unknown node "{node}".')

            graph.add_edge(source, target)

        for name, table in (('kill', self.kill), ('gen', self.gen)):
            for node, items in table.items():
                if node not in graph:
                    raise CfgError(f'{name} is given for unknown node "{node}".')

                self._check_items(name, items)

        self._check_items('iota', self.iota)
        object.__setattr__(self, 'graph', graph)

        # Both properties raise on a malformed graph.
        self.entry
        self.exit

    def _check_items(self, name: str, items: frozenset[str]) -> None:
        unknown = set(items) - set(self.items)

        if unknown:
            raise CfgError(f'{name} mentions unknown items {sorted(unknown)}')

    def _unique(self, nodes: list[str], what: str) -> str:
        if len(nodes) != 1:
            raise CfgError(f'Expected exactly one {what}, found {nodes}')

        return nodes[0]

    @property
    def entry(self) -> str:
        return self._unique([node for node in self.nodes if self.graph.in_degree(node) == 0], 'entry node (no incoming edges)')

    @property
    def exit(self) -> str:
        return self._unique([node for node in self.nodes if self.graph.out_degree(node) == 0], 'exit node (no outgoing edges)')

    def kill_of(self, node: str) -> frozenset[str]:
        return frozenset(self.kill.get(node, ()))

    def gen_of(self, node: str) -> frozenset[str]:
        return frozenset(self.gen.get(node, ()))

    def transfer(self, node: str, value: frozenset[str]) -> frozenset[str]:
        """`(value - kill) | gen` of `node`."""
        return (value - self.kill_of(node)) | self.gen_of(node)
