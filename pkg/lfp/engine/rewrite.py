import itertools
from dataclasses import dataclass
from typing import Iterator

from model import RESERVED_PREFIX

from .grounding import GroundAnd, GroundAtom, GroundCondition, GroundFragment, GroundOr


@dataclass(frozen=True)
class SimpleClause:
    """Conjunction of positive ground atoms implying one ground atom; an empty body is `true`."""

    body: tuple[GroundAtom, ...]
    head: GroundAtom

    def __str__(self) -> str:
        body = ' & '.join(str(atom) for atom in self.body) or 'true'
        return f'{body} => {self.head}'


def fresh_symbols() -> Iterator[GroundAtom]:
    """Endless supply of generated nullary atoms."""
    return (GroundAtom(f'{RESERVED_PREFIX}q{number}') for number in itertools.count(1))


def rewrite_simple(fragment: GroundFragment, fresh: Iterator[GroundAtom] | None = None) -> list[SimpleClause]:
    """Remove every disjunction from a ground fragment.

    Each `cond_1 | .. | cond_n` is replaced by a fresh atom `Q` together with the clauses
    `cond_1 => Q`, .., `cond_n => Q`, innermost disjunctions first. The least model of the
    result, restricted to the original symbols, is the least model of the fragment.

    Args:
        fragment:
            Ground, constant-folded definitions.
        fresh:
            Source of generated atoms, shared between calls so names never repeat within a solve.

    Returns:
        Simple clauses; at most a constant factor more symbols than `fragment.cost()`.
    """
    fresh = fresh or fresh_symbols()
    clauses: list[SimpleClause] = []

    def flatten(cond: GroundCondition) -> tuple[GroundAtom, ...]:
        match cond:
            case GroundAtom():
                return (cond, )
            case GroundAnd(parts):
                return tuple(dict.fromkeys(atom for part in parts for atom in flatten(part)))
            case GroundOr(parts):
                name = next(fresh)

                for part in parts:
                    clauses.append(SimpleClause(flatten(part), name))

                return (name, )
            case _:
                return ()

    for definition in fragment.definitions:
        body = flatten(definition.body)
        clauses.append(SimpleClause(body, definition.head))

    return clauses
