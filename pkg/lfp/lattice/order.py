from typing import Collection, Mapping

from model import Interpretation, LatticeError, RankMap, RelationKind, Row, Universe


def _check_signatures(*interpretations: Interpretation, ranks: RankMap) -> None:
    symbols = interpretations[0].symbols

    for rho in interpretations[1:]:
        if rho.symbols != symbols:
            raise LatticeError(f'Interpretations differ in their symbols: {sorted(symbols ^ rho.symbols)}')

    unranked = symbols - frozenset(ranks)

    if unranked:
        raise LatticeError(f'Symbols without a rank: {sorted(unranked)}')


def lex_leq(rho1: Interpretation, rho2: Interpretation, ranks: RankMap) -> bool:
    """Lexicographic order on interpretations.

    `rho1 <= rho2` iff for some rank j: both agree below j, at rank j defined and rank-0 relations
    grow and constrained relations shrink, and either j is the last rank or they differ at j.

    Raises:
        LatticeError: If the interpretations do not share their symbols.
    """
    _check_signatures(rho1, rho2, ranks=ranks)

    for j in range(ranks.order + 1):
        at_j = [symbol for symbol in ranks.at(j) if symbol in rho1.symbols]
        growing = all(
            rho1[symbol] >= rho2[symbol] if ranks.kind(symbol) is RelationKind.CONSTRAINED else rho1[symbol] <= rho2[symbol]
            for symbol in at_j
        )
        differs = any(rho1[symbol] != rho2[symbol] for symbol in at_j)

        if growing and (j == ranks.order or differs):
            return True

        # Any larger j needs agreement at rank j.
        if differs:
            return False

    return False


def layer_leq(rho1: Interpretation, rho2: Interpretation, j: int, ranks: RankMap) -> bool:
    """Agreement below rank `j` and inclusion at rank `j`, whatever the kind of the relations."""
    _check_signatures(rho1, rho2, ranks=ranks)

    for symbol in rho1.symbols:
        rank = ranks.rank(symbol)

        if rank < j and rho1[symbol] != rho2[symbol]:
            return False

        if rank == j and not rho1[symbol] <= rho2[symbol]:
            return False

    return True


def meet(
    models: Collection[Interpretation],
    ranks: RankMap,
    universe: Universe,
    signature: Mapping[str, int],
) -> Interpretation:
    """Greatest lower bound of `models` in the lexicographic order.

    Computed rank by rank: at rank j only the models agreeing with the result below j take part;
    defined and rank-0 relations get their intersection, constrained relations their union.
    If no model takes part any more, the lattice bounds (all rows, no rows) are used.

    Args:
        models:
            Non-empty collection of interpretations with the same symbols.
        ranks:
            Rank map of the formula the models belong to.
        universe:
            Universe, needed for the all-rows bound.
        signature:
            Arities, needed for the all-rows bound.

    Raises:
        LatticeError: If `models` is empty or the models do not share their symbols.
    """
    models = list(models)

    if not models:
        raise LatticeError('The meet of no interpretations is not supported.')

    _check_signatures(*models, ranks=ranks)

    symbols = models[0].symbols
    result: dict[str, frozenset[Row]] = {}
    taking_part = models

    for j in range(ranks.order + 1):
        lower = [symbol for symbol in symbols if ranks.rank(symbol) == j - 1]
        taking_part = [rho for rho in taking_part if all(rho[symbol] == result[symbol] for symbol in lower)]

        for symbol in (symbol for symbol in ranks.at(j) if symbol in symbols):
            values = [rho[symbol] for rho in taking_part]

            if ranks.kind(symbol) is RelationKind.CONSTRAINED:
                result[symbol] = frozenset().union(*values)
            elif values:
                result[symbol] = frozenset.intersection(*values)
            else:
                result[symbol] = frozenset(universe.rows(signature[symbol]))

    return Interpretation(result)

