from dataclasses import dataclass

from logger import logger
from model import RESERVED_PREFIX, Clause, ClauseKind, Interpretation, LayeredFormula, RankMap, asserted_relations
from stratify import check_stratification

from .dualize import completed_recovery, dualize
from .grounding import ground, nesting_depth
from .propagate import propagate
from .rewrite import fresh_symbols, rewrite_simple


@dataclass(frozen=True)
class LayerStats:
    """What solving one layer took; constrain layers add up both of their define sub-layers."""

    index: int
    kind: ClauseKind
    nesting_depth: int
    ground_definitions: int
    ground_cost: int
    simple_clauses: int
    derived_atoms: int


class Solver:
    """Least solution of a stratified formula above its facts.

    Layers are solved in order. A define layer is grounded, rewritten into simple clauses and
    propagated; a constrain layer is first dualized into two define layers. Generated symbols
    are dropped from the returned interpretation.

    Attributes:
        formula:
            Formula being solved.
        ranks:
            Rank map computed when the solver is created.
        stats:
            One `LayerStats` per layer, filled by `solve`.

    Raises:
        StratificationError: From the constructor, if `formula` is not stratified.
    """

    def __init__(self, formula: LayeredFormula) -> None:
        self.formula = formula
        self.ranks: RankMap = check_stratification(formula)
        self.stats: list[LayerStats] = []
        self._fresh = fresh_symbols()

    def solve(self) -> Interpretation:
        self.stats = []
        known = self.formula.initial_interpretation()

        for index, clause in enumerate(self.formula.layers, start=1):
            known = self._solve_layer(index, clause, known)

        return known.without(lambda symbol: symbol.startswith(RESERVED_PREFIX))

    def _solve_layer(self, index: int, clause: Clause, known: Interpretation) -> Interpretation:
        if clause.kind is ClauseKind.DEFINE:
            sublayers = [clause]
        else:
            dual = dualize(clause)
            sublayers = [dual.complement, completed_recovery(dual, self.formula.signature)]

        definitions = cost = simple_count = derived_count = 0

        for sublayer in sublayers:
            current = asserted_relations(sublayer)
            fragment = ground(sublayer, self.formula.universe, self.formula.functions, known, current)
            simple = rewrite_simple(fragment, self._fresh)
            derived = propagate(simple)

            rows: dict[str, set] = {relation: set() for relation in current}

            for atom in derived:
                if atom.relation in rows:
                    rows[atom.relation].add(atom.args)

            known = known.with_relations(rows)
            definitions += len(fragment)
            cost += fragment.cost()
            simple_count += len(simple)
            derived_count += len(derived)

        stats = LayerStats(index, clause.kind, nesting_depth(clause), definitions, cost, simple_count, derived_count)
        self.stats.append(stats)
        logger.info(
            f'Solved layer {index} ({clause.kind.value}): k={stats.nesting_depth}, '
            f'{stats.simple_clauses} simple clauses, {stats.derived_atoms} atoms derived.'
        )

        return known


def solve(formula: LayeredFormula) -> Interpretation:
    """Least model of `formula` containing its facts; see `Solver`."""
    return Solver(formula).solve()
