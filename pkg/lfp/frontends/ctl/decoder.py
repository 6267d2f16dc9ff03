import re

from frontends.base import BaseDecoder, numbered_lines

from .kripke import Kripke

NAME = r'[A-Za-z_]\w*'
NAMES = rf'((?:\s+{NAME})*)'

PATTERNS = {
    'state': re.compile(rf'^state{NAMES}$'),
    'init': re.compile(rf'^init{NAMES}$'),
    'trans': re.compile(rf'^trans\s+({NAME})\s+({NAME})$'),
    'label': re.compile(rf'^label\s+({NAME}){NAMES}$'),
    'ap': re.compile(rf'^ap{NAMES}$'),
}


class KripkeDecoder(BaseDecoder[Kripke]):
    """Decoder of `.ts` files.

    ```
    state s1 s2
    init s1
    trans s1 s2
    trans s2 s2
    label s2 p
    ap p q
    ```
    States are declared by `state` lines and transitions; propositions by `ap` lines and labels.
    """

    patterns = PATTERNS

    def decode(self, text: str) -> Kripke:
        """Decode a transition system.

        Raises:
            LineMatchError: If a line has none of the shapes above.
            KripkeError: If the system itself is invalid, see `Kripke`.
        """
        states: dict[str, None] = {}
        initial: set[str] = set()
        transitions: set[tuple[str, str]] = set()
        labels: dict[str, set[str]] = {}

        for number, content in numbered_lines(text):
            name, match = self.match_line(number, content)

            match name:
                case 'state':
                    states.update(dict.fromkeys(match.group(1).split()))
                case 'init':
                    initial.update(match.group(1).split())
                case 'trans':
                    states.update(dict.fromkeys(match.groups()))
                    transitions.add((match.group(1), match.group(2)))
                case 'label':
                    for proposition in match.group(2).split():
                        labels.setdefault(proposition, set()).add(match.group(1))
                case 'ap':
                    for proposition in match.group(1).split():
                        labels.setdefault(proposition, set())

        return Kripke(
            states=tuple(states),
            transitions=frozenset(transitions),
            labels={proposition: frozenset(marked) for proposition, marked in labels.items()},
            initial=frozenset(initial),
        )
