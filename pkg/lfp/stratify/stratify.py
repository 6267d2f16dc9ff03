from dataclasses import dataclass

from model import (
    ClauseKind, LayeredFormula, RankEntry, RankMap, RelationKind, StratificationError,
    asserted_relations, used_relations,
)


@dataclass(frozen=True)
class LayerUsage:
    """Syntactic use of relations by one layer."""

    index: int
    kind: ClauseKind
    asserted: frozenset[str]
    positive: frozenset[str]
    negative: frozenset[str]


@dataclass(frozen=True)
class UsageReport:
    layers: tuple[LayerUsage, ...]

    def asserting_layers(self, relation: str) -> list[int]:
        return [usage.index for usage in self.layers if relation in usage.asserted]


def usage(formula: LayeredFormula) -> UsageReport:
    """Scan every layer for asserted, positively used and negatively used relations."""
    layers = []

    for index, clause in enumerate(formula.layers, start=1):
        positive, negative = used_relations(clause)
        layers.append(LayerUsage(index, clause.kind, asserted_relations(clause), positive, negative))

    return UsageReport(tuple(layers))


def check_stratification(formula: LayeredFormula) -> RankMap:
    """Verify the stratification discipline and compute the rank of every relation.

    Args:
        formula:
            Well-formed formula.

    Returns:
        `RankMap` with `rank(R)` the layer asserting `R` (0 for relations no layer asserts).

    Raises:
        StratificationError: For the first violated bullet, scanning layers in order:
            1 when a relation asserted in layer i is asserted again in a later layer,
            2 when a relation positively used in layer i is asserted in a later layer,
            3 when a relation negatively used in layer i is asserted in layer i or later.
    """
    report = usage(formula)
    kinds = {layer.index: layer.kind for layer in report.layers}

    for layer in report.layers:
        for relation in sorted(layer.asserted):
            later = [index for index in report.asserting_layers(relation) if index > layer.index]

            if later:
                if kinds[later[0]] is not layer.kind:
                    reason = f'is both {_participle(layer.kind)} in layer {layer.index} and {_participle(kinds[later[0]])} in layer {later[0]}'
                else:
                    reason = f'is asserted in layer {layer.index} and again in layer {later[0]}'

                raise StratificationError(1, relation, layer.index, later[0], f'bullet 1: relation "{relation}" {reason}.')

        for relation in sorted(layer.positive):
            later = [index for index in report.asserting_layers(relation) if index > layer.index]

            if later:
                raise StratificationError(
                    2, relation, layer.index, later[0],
                    f'bullet 2: relation "{relation}" is positively used in layer {layer.index} but asserted in layer {later[0]}.',
                )

        for relation in sorted(layer.negative):
            later = [index for index in report.asserting_layers(relation) if index >= layer.index]

            if later:
                raise StratificationError(
                    3, relation, layer.index, later[0],
                    f'bullet 3: relation "{relation}" is negatively used in layer {layer.index} but asserted in layer {later[0]}.',
                )

    entries = {symbol: RankEntry(0, RelationKind.FACT) for symbol in formula.signature}

    for layer in report.layers:
        kind = RelationKind.DEFINED if layer.kind is ClauseKind.DEFINE else RelationKind.CONSTRAINED

        for relation in layer.asserted:
            entries[relation] = RankEntry(layer.index, kind)

    return RankMap(entries, formula.order)


def _participle(kind: ClauseKind) -> str:
    return 'defined' if kind is ClauseKind.DEFINE else 'constrained'
