import pytest

from frontends import CfgError, LineMatchError
from frontends.dataflow import Cfg, CfgDecoder, DataflowFrontend, Direction, Modality, dataflow_formula, dataflow_oracle
from model import ClauseKind


def _frontend(samples, name: str, direction: Direction, modality: Modality) -> DataflowFrontend:
    return DataflowFrontend.from_text((samples / name).read_text(), direction=direction, modality=modality)


def test_live_variables(samples) -> None:
    frontend = _frontend(samples, 'live.cfg', Direction.BACKWARD, Modality.MAY)
    expected = {'n1': frozenset(), 'n2': frozenset({'x'}), 'n3': frozenset({'y'}), 'n4': frozenset()}

    assert frontend.solve() == expected
    assert frontend.oracle() == expected


def test_available_items(samples) -> None:
    frontend = _frontend(samples, 'avail.cfg', Direction.FORWARD, Modality.MUST)
    expected = {'e': frozenset(), 'a': frozenset({'t'}), 'b': frozenset({'t'}), 'm': frozenset({'t'})}

    assert frontend.solve() == expected
    assert frontend.oracle() == expected


def test_must_intersects_over_branches() -> None:
    cfg = Cfg(
        nodes=('e', 'a', 'b', 'm'),
        edges=(('e', 'a'), ('e', 'b'), ('a', 'm'), ('b', 'm')),
        items=('t', 'u'),
        gen={'a': frozenset({'t', 'u'}), 'b': frozenset({'t'})},
    )
    frontend = DataflowFrontend(cfg, Direction.FORWARD, Modality.MUST)

    assert frontend.solve()['m'] == {'t'}
    assert DataflowFrontend(cfg, Direction.FORWARD, Modality.MAY).solve()['m'] == {'t', 'u'}


def test_loop_keeps_must_information() -> None:
    cfg = Cfg(
        nodes=('e', 'h', 'x'),
        edges=(('e', 'h'), ('h', 'h'), ('h', 'x')),
        items=('t', ),
        gen={'e': frozenset({'t'})},
        iota=frozenset({'t'}),
    )

    assert dataflow_oracle(cfg, Direction.FORWARD, Modality.MUST)['x'] == {'t'}
    assert DataflowFrontend(cfg, Direction.FORWARD, Modality.MUST).solve()['x'] == {'t'}


def test_formula_shape(samples) -> None:
    cfg = CfgDecoder().decode((samples / 'live.cfg').read_text())
    may = dataflow_formula(cfg, Direction.BACKWARD, Modality.MAY)
    must = dataflow_formula(cfg, Direction.BACKWARD, Modality.MUST)

    assert [clause.kind for clause in may.layers] == [ClauseKind.DEFINE]
    assert [clause.kind for clause in must.layers] == [ClauseKind.CONSTRAIN]
    assert may.universe.atoms == ('n1', 'n2', 'n3', 'n4', 'x', 'y')
    assert may.facts['Kill'] == {('n1', 'x'), ('n2', 'y')}


def test_variable_avoids_universe_atoms() -> None:
    cfg = Cfg(nodes=('x', "x'"), edges=(('x', "x'"), ), items=('i', ), gen={"x'": frozenset({'i'})})

    assert DataflowFrontend(cfg, Direction.FORWARD, Modality.MAY).solve() == {'x': frozenset(), "x'": frozenset({'i'})}


def test_decoder_collects_items_in_order() -> None:
    cfg = CfgDecoder().decode('edge a b\ngen b z\nkill a y\niota w\nitem v\n')

    assert cfg.nodes == ('a', 'b')
    assert cfg.items == ('z', 'y', 'w', 'v')
    assert (cfg.entry, cfg.exit) == ('a', 'b')


def test_decoder_reports_line() -> None:
    with pytest.raises(LineMatchError) as info:
        CfgDecoder().decode('node a\n\n# comment\nedge a\n')

    assert info.value.line == 4


@pytest.mark.parametrize('kwargs, message', [
    ({'nodes': ('a', 'b'), 'edges': ()}, 'entry'),
    ({'nodes': ('a', 'b', 'c'), 'edges': (('a', 'b'), ('a', 'c'))}, 'exit'),
    ({'nodes': ('a', ), 'edges': (('a', 'z'), )}, 'unknown node'),
    ({'nodes': ('a', ), 'edges': (), 'items': ('a', )}, 'both as node and item'),
    ({'nodes': ('a', ), 'edges': (), 'iota': frozenset({'q'})}, 'unknown items'),
    ({'nodes': ('a', 'a'), 'edges': ()}, 'Duplicate'),
])
def test_malformed_cfg(kwargs, message: str) -> None:
    with pytest.raises(CfgError, match=message):
        Cfg(**kwargs)
