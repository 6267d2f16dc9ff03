from pathlib import Path

import pytest

from frontends import CspFrontend, CtlFrontend, DataflowFrontend
from main import EXIT_INPUT_ERROR, EXIT_MISMATCH, EXIT_NOT_STRATIFIED, EXIT_OK, EXIT_UNSATISFIED, main


def _run(tmp_path: Path, *args: str) -> int:
    return main(['--log-dir', str(tmp_path / 'logs'), *args])


def test_check_prints_ranks(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'check', str(samples / 'eqneq.lfp')) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['eq\t1\tdefined', 'neq\t2\tdefined']


def test_check_not_stratified(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'check', str(samples / 'swapped-eqneq.lfp')) == EXIT_NOT_STRATIFIED

    err = capsys.readouterr().err
    assert 'not stratified' in err
    assert '"eq"' in err


def test_solve_prints_model(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'solve', str(samples / 'eqneq.lfp')) == EXIT_OK
    assert capsys.readouterr().out == (samples / 'eqneq.model').read_text()


def test_solve_is_deterministic(tmp_path: Path, samples: Path, capsys) -> None:
    outputs = []

    for _ in range(2):
        _run(tmp_path, 'solve', str(samples / 'sched.lfp'), '--stats')
        outputs.append(capsys.readouterr().out)

    assert outputs[0] == outputs[1]
    assert 'D1\t3\n' in outputs[0]
    assert 'D1\t4\n' not in outputs[0]


def test_solve_stats(tmp_path: Path, samples: Path, capsys) -> None:
    _run(tmp_path, 'solve', str(samples / 'eqneq.lfp'), '--stats')
    stats = [line for line in capsys.readouterr().out.splitlines() if line.startswith('#')]

    assert stats == [
        '# layer 1 define: k=1 ground=3 cost=3 simple=3 derived=3',
        '# layer 2 define: k=2 ground=6 cost=6 simple=6 derived=6',
    ]


def test_oracle_accepts_the_least_model(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'oracle', str(samples / 'eqneq.lfp'), '--model', str(samples / 'eqneq.model')) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['facts\tsatisfied', 'layer 1\tsatisfied', 'layer 2\tsatisfied']


def test_oracle_reports_violations(tmp_path: Path, samples: Path, capsys) -> None:
    model = tmp_path / 'partial.model'
    model.write_text('eq\ta\ta\n')

    assert _run(tmp_path, 'oracle', str(samples / 'eqneq.lfp'), '--model', str(model)) == EXIT_UNSATISFIED
    assert 'layer 1\tviolated' in capsys.readouterr().out


def test_dataflow(tmp_path: Path, samples: Path, capsys) -> None:
    args = ('dataflow', str(samples / 'live.cfg'), '--direction', 'bwd', '--modality', 'may', '--oracle')

    assert _run(tmp_path, *args) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['A\tn2\tx', 'A\tn3\ty']


@pytest.mark.parametrize('explicit', [(), ('--explicit', )])
def test_csp(tmp_path: Path, samples: Path, capsys, explicit: tuple[str, ...]) -> None:
    assert _run(tmp_path, 'csp', str(samples / 'sched.csp'), '--oracle', *explicit) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines == [f's1\t{value}' for value in range(4)] + [f's2\t{value}' for value in range(3, 7)]


def test_ctl_file(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'ctl', str(samples / 'two-state.ts'), '--formula', 'EX p', '--oracle') == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ['Sat\ts1', 'Sat\ts2', 'initial\ttrue']


def test_ctl_bakery(tmp_path: Path, capsys) -> None:
    assert _run(tmp_path, 'ctl', '--bakery', '3', '--formula', 'AG !(crit1 & crit2)', '--oracle') == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 25
    assert lines[-1] == 'initial\ttrue'


def test_missing_file(tmp_path: Path, capsys) -> None:
    assert _run(tmp_path, 'solve', str(tmp_path / 'nope.lfp')) == EXIT_INPUT_ERROR
    assert 'error' in capsys.readouterr().err


def test_parse_error_is_logged(tmp_path: Path, capsys) -> None:
    program = tmp_path / 'bad.lfp'
    program.write_text('universe {a};\nrel R/1;\ndefine { R(b) }\n')

    assert _run(tmp_path, 'solve', str(program)) == EXIT_INPUT_ERROR
    assert '3:' in capsys.readouterr().err
    assert 'ParseError' in (tmp_path / 'logs' / 'error.log').read_text()


def test_unknown_ctl_proposition(tmp_path: Path, samples: Path, capsys) -> None:
    assert _run(tmp_path, 'ctl', str(samples / 'two-state.ts'), '--formula', 'EX q') == EXIT_INPUT_ERROR
    assert 'q' in capsys.readouterr().err


@pytest.mark.parametrize('frontend, disagreeing, args', [
    (DataflowFrontend, {}, ('dataflow', 'live.cfg', '--direction', 'bwd', '--modality', 'may')),
    (CspFrontend, {}, ('csp', 'sched.csp')),
    (CtlFrontend, frozenset(), ('ctl', 'two-state.ts', '--formula', 'EX p')),
])
def test_oracle_mismatch_is_logged(tmp_path: Path, samples: Path, capsys, monkeypatch, frontend, disagreeing, args) -> None:
    monkeypatch.setattr(frontend, 'oracle', lambda self: disagreeing)
    command, file, *rest = args

    assert _run(tmp_path, command, str(samples / file), *rest, '--oracle') == EXIT_MISMATCH
    assert 'disagree' in capsys.readouterr().err

    warnings = (tmp_path / 'logs' / 'warning.log').read_text()
    assert f'{frontend.__name__}: solver and oracle disagree' in warnings
    assert 'ERROR' not in warnings


def test_oracle_agreement_logs_no_warning(tmp_path: Path, samples: Path) -> None:
    assert _run(tmp_path, 'csp', str(samples / 'sched.csp'), '--oracle') == EXIT_OK
    assert (tmp_path / 'logs' / 'warning.log').read_text() == ''
