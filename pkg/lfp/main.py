import argparse
import sys
from typing import Sequence

from engine import Solver
from frontends import CspFrontend, CtlFrontend, DataflowFrontend
from frontends.ctl import bakery_builder, parse_ctl
from frontends.dataflow import Direction, Modality
from logger import configure_logging, logger
from model import LfpError, StratificationError
from oracle import layer_report
from stratify import check_stratification
from syntax import parse_model, parse_program, print_model

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NOT_STRATIFIED = 2
EXIT_UNSATISFIED = 3
EXIT_MISMATCH = 4


def read(path: str) -> str:
    with open(path, encoding='utf-8') as file:
        return file.read()


def check(args: argparse.Namespace) -> int:
    formula = parse_program(read(args.file))
    ranks = check_stratification(formula)

    for symbol in sorted(ranks, key=lambda symbol: (ranks.rank(symbol), symbol)):
        print(f'{symbol}\t{ranks.rank(symbol)}\t{ranks.kind(symbol).value}')

    return EXIT_OK


def solve(args: argparse.Namespace) -> int:
    formula = parse_program(read(args.file))
    solver = Solver(formula)
    rho = solver.solve()
    sys.stdout.write(print_model(rho, formula.universe))

    if args.stats:
        for stats in solver.stats:
            print(
                f'# layer {stats.index} {stats.kind.value}: k={stats.nesting_depth} '
                f'ground={stats.ground_definitions} cost={stats.ground_cost} '
                f'simple={stats.simple_clauses} derived={stats.derived_atoms}'
            )

    return EXIT_OK


def oracle(args: argparse.Namespace) -> int:
    formula = parse_program(read(args.file))
    rho = parse_model(read(args.model), formula)
    report = layer_report(rho, formula)

    for label, holds in report:
        print(f'{label}\t{"satisfied" if holds else "violated"}')

    return EXIT_OK if all(holds for _, holds in report) else EXIT_UNSATISFIED


def _differ(name: str, solved, expected) -> int:
    if solved == expected:
        return EXIT_OK

    print(f'{name}: solver and oracle disagree.\nsolver: {solved}\noracle: {expected}', file=sys.stderr)

    return EXIT_MISMATCH


def dataflow(args: argparse.Namespace) -> int:
    frontend = DataflowFrontend.from_text(read(args.file), direction=Direction(args.direction), modality=Modality(args.modality))
    result, expected = frontend.differential() if args.oracle else (frontend.solve(), None)
    items = frontend.problem.items

    for node in frontend.problem.nodes:
        for item in sorted(result[node], key=items.index):
            print(f'A\t{node}\t{item}')

    if args.oracle:
        return _differ('dataflow', result, expected)

    return EXIT_OK


def csp(args: argparse.Namespace) -> int:
    frontend = CspFrontend.from_text(read(args.file), arithmetic=not args.explicit)
    domains, expected = frontend.differential() if args.oracle else (frontend.solve(), None)

    for variable in frontend.problem.variables:
        for value in sorted(domains[variable], key=str if not frontend.problem.is_integer else None):
            print(f'{variable}\t{value}')

    if args.oracle:
        other, _ = CspFrontend(frontend.problem, arithmetic=args.explicit).differential()
        return _differ('csp', domains, expected) or _differ('csp (other compilation)', other, expected)

    return EXIT_OK


def ctl(args: argparse.Namespace) -> int:
    formula = parse_ctl(args.formula)
    ts = bakery_builder(args.bakery) if args.bakery is not None else CtlFrontend.decoder.decode(read(args.file))
    frontend = CtlFrontend(ts, formula)
    states, expected = frontend.differential() if args.oracle else (frontend.solve(), None)

    for state in ts.states:
        if state in states:
            print(f'Sat\t{state}')

    if ts.initial:
        print(f'initial\t{"true" if ts.initial <= states else "false"}')

    if args.oracle:
        return _differ('ctl', states, expected)

    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lfp', description='Solve layered fixed point formulae and the problems compiled into them.')
    parser.add_argument('--log-dir', default='logs', help='directory of the log files (default: logs)')
    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('check', help='check stratification and print the rank of every relation')
    command.add_argument('file')
    command.set_defaults(handler=check)

    command = commands.add_parser('solve', help='print the least model of a program')
    command.add_argument('file')
    command.add_argument('--stats', action='store_true', help='print per-layer grounding statistics')
    command.set_defaults(handler=solve)

    command = commands.add_parser('oracle', help='check a model file against a program')
    command.add_argument('file')
    command.add_argument('--model', required=True)
    command.set_defaults(handler=oracle)

    command = commands.add_parser('dataflow', help='run a bit-vector analysis on a control flow graph')
    command.add_argument('file')
    command.add_argument('--direction', choices=[direction.value for direction in Direction], required=True)
    command.add_argument('--modality', choices=[modality.value for modality in Modality], required=True)
    command.add_argument('--oracle', action='store_true', help='compare with the worklist algorithm')
    command.set_defaults(handler=dataflow)

    command = commands.add_parser('csp', help='compute maximal arc consistent domains')
    command.add_argument('file')
    command.add_argument('--explicit', action='store_true', help='compile difference constraints to explicit tables')
    command.add_argument('--oracle', action='store_true', help='compare both compilations with AC-3')
    command.set_defaults(handler=csp)

    command = commands.add_parser('ctl', help='model check a CTL formula')
    source = command.add_mutually_exclusive_group(required=True)
    source.add_argument('file', nargs='?')
    source.add_argument('--bakery', type=int, metavar='BOUND', help='use the Bakery system with tickets clamped at BOUND')
    command.add_argument('--formula', required=True)
    command.add_argument('--oracle', action='store_true', help='compare with explicit fixpoint iteration')
    command.set_defaults(handler=ctl)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_dir)

    try:
        return args.handler(args)
    except StratificationError as e:
        print(f'not stratified: {e}', file=sys.stderr)
        return EXIT_NOT_STRATIFIED
    except (LfpError, OSError) as e:
        logger.error(f'{args.command}: {e.__class__.__name__}: {e}')
        print(f'error: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.critical(f'Unexpected exception in "{args.command}". {e.__class__.__name__}: {e}', exc_info=sys.exc_info())
        print(f'internal error: {e.__class__.__name__}: {e}', file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
