import itertools
from typing import Iterable, Iterator, Mapping

from model import Interpretation, LayeredFormula, Row, Universe
from oracle import sat_formula


def _subsets(rows: list[Row]) -> Iterator[frozenset[Row]]:
    for size in range(len(rows) + 1):
        for chosen in itertools.combinations(rows, size):
            yield frozenset(chosen)


def all_interpretations(
    universe: Universe,
    signature: Mapping[str, int],
    fixed: Mapping[str, Iterable[Row]] | None = None,
) -> Iterator[Interpretation]:
    """Every interpretation of `signature` over `universe`.

    There are 2^(sum of |U|^arity) of them, so this is only usable on toy universes.
    Relations named in `fixed` keep the given rows instead of ranging over all subsets.
    """
    fixed = fixed or {}
    symbols = sorted(signature)
    choices = [
        [frozenset(fixed[symbol])] if symbol in fixed else list(_subsets(list(universe.rows(signature[symbol]))))
        for symbol in symbols
    ]

    for values in itertools.product(*choices):
        yield Interpretation(dict(zip(symbols, values)))


def models_above(formula: LayeredFormula) -> list[Interpretation]:
    """Every model of `formula` containing its facts, by exhaustive enumeration."""
    return [
        rho
        for rho in all_interpretations(formula.universe, formula.signature)
        if sat_formula(rho, formula)
    ]
