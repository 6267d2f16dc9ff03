import itertools

import pytest

from engine import (
    GroundAnd, GroundAtom, GroundDefinition, GroundOr, SimpleClause, Solver, complement_symbol, completed_recovery, dualize,
    gfp_iterate, ground, nesting_depth, propagate, rewrite_simple, solve,
)
from engine.grounding import GroundFragment
from model import (
    TRUE, And, Assertion, Clause, ClauseKind, ConImplies, DefImplies, FormulaError, FunctionApp, FunctionEnv,
    Interpretation, NegQuery, Or, Query, StratificationError, Universe, Variable, forall,
)
from oracle import sat_cond
from syntax import parse_program

X = Variable('x')


def _atom(relation: str, *args) -> GroundAtom:
    return GroundAtom(relation, tuple(args))


def test_eqneq_least_model(samples) -> None:
    formula = parse_program((samples / 'eqneq.lfp').read_text())
    rho = solve(formula)
    atoms = ['a', 'b', 'c']

    assert rho['eq'] == {(atom, atom) for atom in atoms}
    assert rho['neq'] == {(a, b) for a in atoms for b in atoms if a != b}


def test_eqneq_stats(samples) -> None:
    solver = Solver(parse_program((samples / 'eqneq.lfp').read_text()))
    solver.solve()

    assert [(stats.index, stats.nesting_depth, stats.simple_clauses, stats.derived_atoms) for stats in solver.stats] == [
        (1, 1, 3, 3),
        (2, 2, 6, 6),
    ]


def test_sched_greatest_domains(samples) -> None:
    rho = solve(parse_program((samples / 'sched.lfp').read_text()))

    assert rho['D1'] == {(value, ) for value in range(0, 4)}
    assert rho['D2'] == {(value, ) for value in range(3, 7)}
    assert rho['C12'] == {(3, ), (4, )}


def test_solver_rejects_unstratified(samples) -> None:
    with pytest.raises(StratificationError):
        Solver(parse_program((samples / 'swapped-eqneq.lfp').read_text()))


def test_solution_has_no_generated_symbols() -> None:
    formula = parse_program('universe {a, b};\nrel S/1;\nrel P/1;\nfact S(a).\nconstrain { forall x: P(x) => S(x) | S(x) }')
    rho = solve(formula)

    assert rho.symbols == {'S', 'P'}
    assert rho['P'] == {('a', )}


def test_constrained_rows_nothing_constrains_stay() -> None:
    formula = parse_program('universe 0..2;\nrel P/1;\nconstrain { forall x: P(add(x, 1)) => false }')

    # Only P(1) and P(2) are constrained heads; P(0) belongs to the greatest solution.
    assert solve(formula)['P'] == {(0, )}


def test_complement_query_on_undefined_arguments() -> None:
    formula = parse_program('universe 0..2;\nrel P/1;\nconstrain { forall x: P(x) => P(add(x, 1)) }')

    # P(2) needs P(3), which is undefined and therefore false; then P(1) and P(0) go too.
    assert solve(formula)['P'] == set()


def test_dualize_shape() -> None:
    clause = Clause.constrain(forall('x', ConImplies(Assertion('P', (X, )), And(Query('S', (X, )), Query('P', (X, ))))))
    dual = dualize(clause)
    co_p = complement_symbol('P')

    assert dual.complements == {'P': co_p}
    assert dual.complement == Clause.define(forall('x', DefImplies(Or(NegQuery('S', (X, )), Query(co_p, (X, ))), Assertion(co_p, (X, )))))
    assert dual.recovery == Clause.define(forall('x', DefImplies(And(And(Query('S', (X, )), TRUE), NegQuery(co_p, (X, ))), Assertion('P', (X, )))))


def test_completed_recovery_adds_unconstrained_rows() -> None:
    clause = Clause.constrain(forall('x', ConImplies(Assertion('P', (X, )), Query('S', (X, )))))
    completed = completed_recovery(dualize(clause), {'P': 1})

    assert completed.kind is ClauseKind.DEFINE
    assert completed.body.left == dualize(clause).recovery.body
    assert completed.body.right == forall('__x0', DefImplies(NegQuery('__co_P', (Variable('__x0'), )), Assertion('P', (Variable('__x0'), ))))


def test_dualize_rejects_define() -> None:
    with pytest.raises(FormulaError):
        dualize(Clause.define(DefImplies(TRUE, Assertion('P', ()))))


def test_ground_folds_known_relations() -> None:
    universe = Universe.symbolic(['a', 'b'])
    clause = Clause.define(forall('x', DefImplies(And(Query('S', (X, )), Query('R', (X, ))), Assertion('R', (X, )))))
    known = Interpretation({'S': [('a', )], 'R': []})
    fragment = ground(clause, universe, FunctionEnv(universe), known, frozenset({'R'}))

    assert fragment.definitions == (GroundDefinition(_atom('R', 'a'), _atom('R', 'a')), )
    assert fragment.cost() == 2


def test_ground_drops_undefined_heads() -> None:
    universe = Universe.integer_range(0, 1)
    head = Assertion('R', (FunctionApp('add', (X, FunctionApp('1'))), ))
    fragment = ground(Clause.define(forall('x', DefImplies(TRUE, head))), universe, FunctionEnv(universe), Interpretation({'R': []}), frozenset({'R'}))

    assert fragment.definitions == (GroundDefinition(True, _atom('R', 1)), )


def test_ground_rejects_negative_current_query() -> None:
    universe = Universe.symbolic(['a'])
    clause = Clause.define(forall('x', DefImplies(NegQuery('R', (X, )), Assertion('R', (X, )))))

    with pytest.raises(FormulaError):
        ground(clause, universe, FunctionEnv(universe), Interpretation({'R': []}), frozenset({'R'}))


def test_rewrite_replaces_disjunctions_with_fresh_atoms() -> None:
    p, q, r = _atom('P'), _atom('Q'), _atom('R')
    clauses = rewrite_simple(GroundFragment((GroundDefinition(GroundOr((p, q)), r), )))
    fresh = _atom('__q1')

    assert clauses == [SimpleClause((p, ), fresh), SimpleClause((q, ), fresh), SimpleClause((fresh, ), r)]


def test_propagate_is_the_least_closure() -> None:
    p, q, r, s = _atom('P'), _atom('Q'), _atom('R'), _atom('S')
    clauses = [SimpleClause((), p), SimpleClause((p, q), r), SimpleClause((p, ), q), SimpleClause((s, ), s)]

    assert propagate(clauses) == {p, q, r}


def test_gfp_iterate_matches_solver(samples) -> None:
    formula = parse_program((samples / 'sched.lfp').read_text())
    solver = Solver(formula)
    below = formula.initial_interpretation().with_relations(
        {'C1': [(v, ) for v in range(5)], 'C2': [(v, ) for v in range(7)], 'C12': [(3, ), (4, )]}
    )

    assert gfp_iterate(formula.layers[1], below, formula.functions) == solver.solve()


def test_nesting_depth_counts_clause_and_condition_quantifiers(samples) -> None:
    formula = parse_program((samples / 'sched.lfp').read_text())

    assert nesting_depth(formula.layers[0]) == 0
    assert nesting_depth(formula.layers[1]) == 2


def test_constrain_with_true_keeps_relation_full() -> None:
    formula = parse_program('universe {a, b, c};\nrel R/1;\nconstrain { forall x: R(x) => true }')

    assert solve(formula)['R'] == {('a', ), ('b', ), ('c', )}


def test_constrain_with_false_empties_relation() -> None:
    formula = parse_program('universe {a, b, c};\nrel R/1;\nconstrain { forall x: R(x) => false }')

    assert solve(formula)['R'] == set()


def test_gfp_iterate_exists_globally() -> None:
    formula = parse_program(
        'universe {s1, s2};\nrel T/2;\nrel P/1;\nrel G/1;\n'
        'fact T(s1, s1).\nfact T(s1, s2).\nfact P(s1).\n'
        'constrain { forall x: G(x) => P(x) & exists y: T(x, y) & G(y) }'
    )
    rho = gfp_iterate(formula.layers[0], formula.initial_interpretation(), formula.functions)

    assert rho['G'] == {('s1', )}
    assert rho == solve(formula)


@pytest.mark.parametrize('a, b, c', list(itertools.product([False, True], repeat=3)))
def test_rewrite_of_or_inside_and_agrees_with_satisfaction(a: bool, b: bool, c: bool) -> None:
    atoms = {'A': a, 'B': b, 'C': c}
    head = _atom('H')
    body = GroundAnd((GroundOr((_atom('A'), _atom('B'))), _atom('C')))
    facts = [SimpleClause((), _atom(name)) for name, holds in atoms.items() if holds]
    derived = propagate(facts + rewrite_simple(GroundFragment((GroundDefinition(body, head), ))))

    rho = Interpretation({name: [()] if holds else [] for name, holds in atoms.items()})
    cond = And(Or(Query('A', ()), Query('B', ())), Query('C', ()))

    assert (head in derived) == sat_cond(rho, {}, cond, universe=Universe.symbolic(['a']))


def test_propagate_without_clauses_derives_nothing() -> None:
    assert propagate([]) == frozenset()
