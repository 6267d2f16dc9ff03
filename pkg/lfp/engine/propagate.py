from collections import defaultdict, deque
from typing import Iterable

from .grounding import GroundAtom
from .rewrite import SimpleClause


def propagate(clauses: Iterable[SimpleClause]) -> frozenset[GroundAtom]:
    """Least set of atoms closed under `clauses`.

    Classical Horn propagation: every clause keeps a counter of body atoms not yet derived,
    every atom a list of the clauses waiting on it. Runs in time linear in the total clause size.
    """
    missing: list[int] = []
    heads: list[GroundAtom] = []
    waiting: defaultdict[GroundAtom, list[int]] = defaultdict(list)
    derived: set[GroundAtom] = set()
    worklist: deque[GroundAtom] = deque()

    for number, clause in enumerate(clauses):
        body = set(clause.body)
        missing.append(len(body))
        heads.append(clause.head)

        for atom in body:
            waiting[atom].append(number)

        if not body and clause.head not in derived:
            derived.add(clause.head)
            worklist.append(clause.head)

    while worklist:
        atom = worklist.popleft()

        for number in waiting.pop(atom, ()):
            missing[number] -= 1

            if missing[number] == 0 and heads[number] not in derived:
                derived.add(heads[number])
                worklist.append(heads[number])

    return frozenset(derived)
