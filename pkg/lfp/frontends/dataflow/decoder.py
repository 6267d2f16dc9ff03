import re

from frontends.base import BaseDecoder, numbered_lines

from .cfg import Cfg

NAME = r'[A-Za-z_]\w*'
NAMES = rf'((?:\s+{NAME})*)'

PATTERNS = {
    'node': re.compile(rf'^node{NAMES}$'),
    'edge': re.compile(rf'^edge\s+({NAME})\s+({NAME})$'),
    'kill': re.compile(rf'^kill\s+({NAME}){NAMES}$'),
    'gen': re.compile(rf'^gen\s+({NAME}){NAMES}$'),
    'iota': re.compile(rf'^iota{NAMES}$'),
    'item': re.compile(rf'^item{NAMES}$'),
}


class CfgDecoder(BaseDecoder[Cfg]):
    """Decoder of `.cfg` files.

    ```
    node n1 n2
    edge n1 n2
    kill n1 x
    gen n2 x y
    iota y
    ```
    Nodes are declared by `node` lines and edges, items by `item` lines and every mention
    in `kill`, `gen` and `iota`, both in order of first appearance.
    """

    patterns = PATTERNS

    def decode(self, text: str) -> Cfg:
        """Decode a control flow graph.

        Raises:
            LineMatchError: If a line has none of the shapes above.
            CfgError: If the graph itself is malformed, see `Cfg`.
        """
        nodes: dict[str, None] = {}
        items: dict[str, None] = {}
        edges: list[tuple[str, str]] = []
        kill: dict[str, set[str]] = {}
        gen: dict[str, set[str]] = {}
        iota: set[str] = set()

        for number, content in numbered_lines(text):
            name, match = self.match_line(number, content)

            match name:
                case 'node':
                    nodes.update(dict.fromkeys(match.group(1).split()))
                case 'edge':
                    nodes.update(dict.fromkeys(match.groups()))
                    edges.append((match.group(1), match.group(2)))
                case 'kill' | 'gen':
                    table = kill if name == 'kill' else gen
                    mentioned = match.group(2).split()
                    table.setdefault(match.group(1), set()).update(mentioned)
                    items.update(dict.fromkeys(mentioned))
                case 'iota':
                    mentioned = match.group(1).split()
                    iota.update(mentioned)
                    items.update(dict.fromkeys(mentioned))
                case 'item':
                    items.update(dict.fromkeys(match.group(1).split()))

        return Cfg(
            nodes=tuple(nodes),
            edges=tuple(edges),
            items=tuple(items),
            kill={node: frozenset(values) for node, values in kill.items()},
            gen={node: frozenset(values) for node, values in gen.items()},
            iota=frozenset(iota),
        )
