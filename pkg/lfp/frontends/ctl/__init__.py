"""CTL model checking compiled into one LFP layer per subformula, plus the Bakery mutual exclusion system."""

from .ctl import CtlFrontend, ctl_compile, ctl_oracle, label_relation, top_relation
from .decoder import KripkeDecoder
from .formula import (
    AllGlobally, AllNext, AllUntil, Atomic, CtlAnd, CtlFormula, CtlNot, CtlTrue, ExistsGlobally, ExistsNext,
    ExistsUntil, atomic_propositions, ctl_false, ctl_or, parse_ctl, subformulas,
)
from .kripke import Kripke, bakery_builder, bakery_state

__all__ = (
    'CtlFrontend', 'ctl_compile', 'ctl_oracle', 'label_relation', 'top_relation',
    'KripkeDecoder',
    'AllGlobally', 'AllNext', 'AllUntil', 'Atomic', 'CtlAnd', 'CtlFormula', 'CtlNot', 'CtlTrue', 'ExistsGlobally',
    'ExistsNext', 'ExistsUntil', 'atomic_propositions', 'ctl_false', 'ctl_or', 'parse_ctl', 'subformulas',
    'Kripke', 'bakery_builder', 'bakery_state',
)
