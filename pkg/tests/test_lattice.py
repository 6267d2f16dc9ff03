import pytest

from engine import solve
from lattice import all_interpretations, layer_leq, lex_leq, meet, models_above
from model import Interpretation, LatticeError, RankEntry, RankMap, RelationKind, Universe
from stratify import check_stratification
from syntax import parse_program

UNIVERSE = Universe.symbolic(['a', 'b'])
RANKS = RankMap(
    {
        'F': RankEntry(0, RelationKind.FACT),
        'G': RankEntry(1, RelationKind.DEFINED),
        'H': RankEntry(2, RelationKind.CONSTRAINED),
        'K': RankEntry(2, RelationKind.DEFINED),
    },
    2,
)
SIGNATURE = {'F': 1, 'G': 1, 'H': 1, 'K': 1}

SMALL = """
universe {a, b};
rel S/1;
rel Q/1;
rel R/1;
fact S(a).
define { forall x: S(x) => Q(x), forall x: Q(x) & !S(x) => Q(x) }
constrain { forall x: R(x) => !Q(x) & (R(x) | S(x)) }
"""


def _rho(**relations: str) -> Interpretation:
    rows = {symbol: [(atom, ) for atom in relations.get(symbol, '')] for symbol in SIGNATURE}
    return Interpretation(rows)


def test_lex_leq_constrained_relations_shrink_upwards() -> None:
    big, small = _rho(F='a', G='a', H='ab'), _rho(F='a', G='a', H='a')

    assert lex_leq(big, small, RANKS)
    assert not lex_leq(small, big, RANKS)


def test_lex_leq_decided_at_the_lowest_difference() -> None:
    low, high = _rho(F='a', H='a'), _rho(F='ab', H='ab', K='b')

    assert lex_leq(low, high, RANKS)
    assert not lex_leq(high, low, RANKS)


def test_lex_leq_incomparable() -> None:
    left, right = _rho(F='a'), _rho(F='b')

    assert not lex_leq(left, right, RANKS)
    assert not lex_leq(right, left, RANKS)


def test_lex_leq_rejects_different_symbols() -> None:
    with pytest.raises(LatticeError):
        lex_leq(_rho(), Interpretation({'F': []}), RANKS)


def test_layer_leq() -> None:
    assert layer_leq(_rho(F='a', G='a'), _rho(F='a', G='ab', H='b'), 1, RANKS)
    assert not layer_leq(_rho(F='a', G='a'), _rho(F='b', G='ab'), 1, RANKS)
    assert not layer_leq(_rho(F='a', G='ab'), _rho(F='a', G='a'), 1, RANKS)


def test_meet_with_no_model_left_uses_the_bounds() -> None:
    result = meet([_rho(F='a', G='a', H='a'), _rho(F='b', G='b', H='b')], RANKS, UNIVERSE, SIGNATURE)

    assert result == _rho(G='ab', K='ab')


def test_meet_unions_constrained_and_intersects_defined() -> None:
    result = meet([_rho(F='a', H='a', K='ab'), _rho(F='a', H='b', K='b')], RANKS, UNIVERSE, SIGNATURE)

    assert result == _rho(F='a', H='ab', K='b')


def test_meet_of_nothing() -> None:
    with pytest.raises(LatticeError):
        meet([], RANKS, UNIVERSE, SIGNATURE)


def test_all_interpretations_counts_and_fixed() -> None:
    assert len(list(all_interpretations(UNIVERSE, {'P': 1, 'N': 0}))) == 8
    assert len(list(all_interpretations(UNIVERSE, {'P': 1, 'N': 0}, fixed={'P': [('a', )]}))) == 2


def test_least_model_is_the_meet_of_all_models() -> None:
    formula = parse_program(SMALL)
    ranks = check_stratification(formula)
    models = models_above(formula)
    rho = solve(formula)

    assert rho in models
    assert meet(models, ranks, formula.universe, formula.signature) == rho
    assert all(lex_leq(rho, model, ranks) for model in models)
    assert rho == Interpretation({'S': [('a', )], 'Q': [('a', )], 'R': [('b', )]})
