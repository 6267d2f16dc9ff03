"""Randomized agreement between the solver, the satisfaction oracle and the classical algorithms."""

import itertools
import random

import pytest

from engine import Solver, gfp_iterate, solve
from frontends.csp import CspFrontend, ac3_oracle
from frontends.ctl import CtlFrontend, ctl_oracle
from frontends.dataflow import DataflowFrontend, Direction, Modality, dataflow_oracle
from generators import (
    random_cfg, random_constrain_formula, random_csp, random_ctl, random_formula, random_interpretation,
    random_kripke, random_layer, random_rank_map, random_signature,
)
from lattice import lex_leq, meet, models_above
from model import (
    ClauseKind, FunctionEnv, Interpretation, LayeredFormula, RelationKind, StratificationError, Universe,
    asserted_relations, used_relations,
)
from oracle import sat_formula
from stratify import check_stratification

SEEDS = range(100)


@pytest.mark.parametrize('seed', SEEDS)
def test_solution_is_the_least_model(seed: int) -> None:
    formula = random_formula(random.Random(seed), max_rows=6)
    ranks = check_stratification(formula)
    models = models_above(formula)
    rho = solve(formula)

    assert sat_formula(rho, formula)
    assert meet(models, ranks, formula.universe, formula.signature) == rho
    assert all(lex_leq(rho, model, ranks) for model in models)


@pytest.mark.parametrize('seed', SEEDS)
def test_models_are_closed_under_meets(seed: int) -> None:
    rng = random.Random(seed)
    formula = random_formula(rng, max_rows=6)
    ranks = check_stratification(formula)
    models = models_above(formula)

    for _ in range(10):
        chosen = rng.sample(models, rng.randint(1, min(3, len(models))))

        assert sat_formula(meet(chosen, ranks, formula.universe, formula.signature), formula)


@pytest.mark.parametrize('seed', SEEDS)
def test_lex_order_is_a_partial_order_with_meets(seed: int) -> None:
    rng = random.Random(seed)
    ranks, signature = random_rank_map(rng)
    universe = Universe.symbolic(['a', 'b'])
    sample = [random_interpretation(rng, universe, signature) for _ in range(6)]

    for rho in sample:
        assert lex_leq(rho, rho, ranks)

    for first, second, third in itertools.product(sample, repeat=3):
        if lex_leq(first, second, ranks) and lex_leq(second, first, ranks):
            assert first == second

        if lex_leq(first, second, ranks) and lex_leq(second, third, ranks):
            assert lex_leq(first, third, ranks)

    chosen = sample[:rng.randint(1, 4)]
    lower = meet(chosen, ranks, universe, signature)

    assert all(lex_leq(lower, rho, ranks) for rho in chosen)

    for rho in sample:
        if all(lex_leq(rho, other, ranks) for other in chosen):
            assert lex_leq(rho, lower, ranks)


@pytest.mark.parametrize('seed', SEEDS)
def test_dualized_layer_is_the_greatest_solution(seed: int) -> None:
    formula = random_constrain_formula(random.Random(seed))
    rho = Solver(formula).solve()

    assert rho == gfp_iterate(formula.layers[0], formula.initial_interpretation(), formula.functions)
    assert sat_formula(rho, formula)


@pytest.mark.parametrize('seed', SEEDS)
def test_dataflow_matches_worklist(seed: int) -> None:
    cfg = random_cfg(random.Random(seed))

    for direction, modality in itertools.product(Direction, Modality):
        assert DataflowFrontend(cfg, direction, modality).solve() == dataflow_oracle(cfg, direction, modality), (direction, modality)


@pytest.mark.parametrize('seed', SEEDS)
def test_csp_matches_ac3(seed: int) -> None:
    csp = random_csp(random.Random(seed))
    expected = ac3_oracle(csp)

    assert CspFrontend(csp).solve() == expected
    assert CspFrontend(csp, arithmetic=False).solve() == expected


@pytest.mark.parametrize('seed', SEEDS)
def test_ctl_matches_explicit_fixpoints(seed: int) -> None:
    rng = random.Random(seed)
    ts = random_kripke(rng)
    phi = random_ctl(rng)

    assert CtlFrontend(ts, phi).solve() == ctl_oracle(phi, ts), str(phi)


def _any_layering(rng: random.Random) -> LayeredFormula:
    """Up to three layers using relations with no regard for stratification."""
    universe = Universe.symbolic(['a', 'b'])
    signature = random_signature(rng, len(universe), max_rows=12)
    relations = list(signature)
    layers = []

    for _ in range(rng.randint(1, 3)):
        kind = rng.choice([ClauseKind.DEFINE, ClauseKind.CONSTRAIN])
        asserted = rng.sample(relations, rng.randint(1, len(relations)))
        positive = [relation for relation in relations if rng.random() < 0.5]
        negative = [relation for relation in relations if rng.random() < 0.3]
        layers.append(random_layer(rng, kind, signature, asserted, positive, negative))

    return LayeredFormula(universe, signature, FunctionEnv(universe), Interpretation(), tuple(layers))


def _brute_force_ranks(formula: LayeredFormula) -> dict[str, int] | None:
    """Some rank function meeting every layer's use, found by trying them all, or `None`."""
    relations = sorted(formula.signature)

    for candidate in itertools.product(range(formula.order + 1), repeat=len(relations)):
        rank = dict(zip(relations, candidate))
        fits = True

        for index, clause in enumerate(formula.layers, start=1):
            positive, negative = used_relations(clause)
            asserted_elsewhere = set().union(*(asserted_relations(other) for number, other in enumerate(formula.layers, start=1) if number != index))

            fits &= all(rank[relation] == index and relation not in asserted_elsewhere for relation in asserted_relations(clause))
            fits &= all(rank[relation] <= index for relation in positive)
            fits &= all(rank[relation] < index for relation in negative)

        fits &= all(rank[relation] == 0 for relation in relations if relation not in formula.asserted)

        if fits:
            return rank

    return None


@pytest.mark.parametrize('seed', range(300))
def test_stratification_agrees_with_brute_force(seed: int) -> None:
    formula = _any_layering(random.Random(seed))
    expected = _brute_force_ranks(formula)

    if expected is None:
        with pytest.raises(StratificationError):
            check_stratification(formula)

        return

    ranks = check_stratification(formula)

    assert {relation: ranks.rank(relation) for relation in formula.signature} == expected

    for relation in formula.signature:
        if ranks.rank(relation) == 0:
            assert ranks.kind(relation) is RelationKind.FACT
        else:
            kind = formula.layers[ranks.rank(relation) - 1].kind
            assert ranks.kind(relation) is (RelationKind.DEFINED if kind is ClauseKind.DEFINE else RelationKind.CONSTRAINED)
