import pytest

from model import RelationKind, StratificationError
from stratify import check_stratification, usage
from syntax import parse_program

HEADER = 'universe {a, b};\nrel P/1;\nrel Q/1;\nrel R/1;\n'


def _program(*layers: str) -> str:
    return HEADER + '\n'.join(layers)


def test_eqneq_ranks(samples) -> None:
    ranks = check_stratification(parse_program((samples / 'eqneq.lfp').read_text()))

    assert ranks.rank('eq') == 1
    assert ranks.rank('neq') == 2
    assert ranks.kind('neq') is RelationKind.DEFINED
    assert ranks.order == 2


def test_swapped_eqneq_is_bullet_three(samples) -> None:
    with pytest.raises(StratificationError) as info:
        check_stratification(parse_program((samples / 'swapped-eqneq.lfp').read_text()))

    assert info.value.bullet == 3
    assert info.value.relation == 'eq'
    assert (info.value.used_layer, info.value.asserted_layer) == (1, 2)


def test_relations_without_layer_are_facts() -> None:
    ranks = check_stratification(parse_program(_program('define { forall x: P(x) => Q(x) }')))

    assert ranks.rank('P') == 0
    assert ranks.kind('P') is RelationKind.FACT
    assert ranks.at(0) == ('P', 'R')


def test_reassertion_is_bullet_one() -> None:
    formula = parse_program(_program('define { forall x: P(x) => Q(x) }', 'constrain { forall x: Q(x) => P(x) }'))

    with pytest.raises(StratificationError, match='both defined in layer 1 and constrained in layer 2') as info:
        check_stratification(formula)

    assert info.value.bullet == 1


def test_positive_use_before_assertion_is_bullet_two() -> None:
    formula = parse_program(_program('define { forall x: Q(x) => P(x) }', 'define { forall x: R(x) => Q(x) }'))

    with pytest.raises(StratificationError) as info:
        check_stratification(formula)

    assert (info.value.bullet, info.value.relation) == (2, 'Q')


def test_negative_use_in_same_layer_is_bullet_three() -> None:
    formula = parse_program(_program('constrain { forall x: P(x) => !P(x) | R(x) }'))

    with pytest.raises(StratificationError) as info:
        check_stratification(formula)

    assert (info.value.bullet, info.value.relation, info.value.asserted_layer) == (3, 'P', 1)


def test_positive_recursion_within_a_layer_is_allowed() -> None:
    formula = parse_program(_program('define { forall x: P(x) | Q(x) => Q(x) }', 'constrain { forall x: R(x) => !Q(x) & R(x) }'))
    ranks = check_stratification(formula)

    assert ranks.kind('R') is RelationKind.CONSTRAINED
    assert ranks.rank('R') == 2


def test_usage_report() -> None:
    report = usage(parse_program(_program('define { forall x: P(x) & !R(x) => Q(x) }')))

    (layer, ) = report.layers
    assert layer.asserted == {'Q'}
    assert layer.positive == {'P'}
    assert layer.negative == {'R'}
    assert report.asserting_layers('Q') == [1]
