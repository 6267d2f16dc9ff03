from model import (
    RESERVED_PREFIX, And, Assertion, Body, BodyAnd, BodyForall, Clause, Condition, ConImplies, DefImplies, Exists,
    Forall, FunctionApp, Interpretation, LayeredFormula, NegQuery, Or, Query, Term, Truth, Universe, Variable,
)

# Binding strength of each construct; a child weaker than its context is parenthesized.
QUANTIFIER, IMPLIES, OR, AND, NOT, ATOM = range(6)


def format_term(term: Term) -> str:
    match term:
        case Variable(name):
            return name
        case FunctionApp(symbol, ()):
            return symbol
        case FunctionApp(symbol, args):
            return f'{symbol}({", ".join(format_term(arg) for arg in args)})'


def _atom(relation: str, args: tuple[Term, ...]) -> str:
    if not args:
        return relation

    return f'{relation}({", ".join(format_term(arg) for arg in args)})'


def _parenthesize(text: str, level: int, minimum: int) -> str:
    return f'({text})' if level < minimum else text


def format_condition(cond: Condition, minimum: int = QUANTIFIER) -> str:
    match cond:
        case Query(relation, args):
            return _atom(relation, args)
        case NegQuery(relation, args):
            return '!' + _atom(relation, args)
        case Truth(value):
            return 'true' if value else 'false'
        case And(left, right):
            text = f'{format_condition(left, AND)} & {format_condition(right, NOT)}'
            return _parenthesize(text, AND, minimum)
        case Or(left, right):
            text = f'{format_condition(left, OR)} | {format_condition(right, AND)}'
            return _parenthesize(text, OR, minimum)
        case Exists(var, body) | Forall(var, body):
            quantifier = 'exists' if isinstance(cond, Exists) else 'forall'
            return _parenthesize(f'{quantifier} {var}: {format_condition(body)}', QUANTIFIER, minimum)


def _head(head: Assertion) -> str:
    return _atom(head.relation, head.args)


def format_body(body: Body, minimum: int = QUANTIFIER) -> str:
    match body:
        case DefImplies(cond, head):
            text = f'{format_condition(cond, OR)} => {_head(head)}'
            return _parenthesize(text, IMPLIES, minimum)
        case ConImplies(head, cond):
            text = f'{_head(head)} => {format_condition(cond, OR)}'
            return _parenthesize(text, IMPLIES, minimum)
        case BodyForall(var, inner):
            return _parenthesize(f'forall {var}: {format_body(inner)}', QUANTIFIER, minimum)
        case BodyAnd(left, right):
            text = f'{format_body(left, AND)} & {format_body(right, NOT)}'
            return _parenthesize(text, AND, minimum)


def format_clause(clause: Clause) -> str:
    """One layer block; top level conjuncts go on their own lines, separated by `,`."""
    conjuncts: list[Body] = []
    body = clause.body

    while isinstance(body, BodyAnd):
        conjuncts.append(body.right)
        body = body.left

    conjuncts.append(body)
    lines = ',\n'.join(f'    {format_body(conjunct)}' for conjunct in reversed(conjuncts))

    return f'{clause.kind.value} {{\n{lines}\n}}'


def _row(row: tuple) -> str:
    return ', '.join(str(atom) for atom in row)


def print_program(formula: LayeredFormula) -> str:
    """Concrete syntax of `formula`, parsing back to the same formula."""
    universe = formula.universe

    if universe.is_integer:
        lines = [f'universe {universe.atoms[0]}..{universe.atoms[-1]};']
    else:
        lines = [f'universe {{{_row(universe.atoms)}}};']

    lines.extend(f'rel {symbol}/{arity};' for symbol, arity in formula.signature.items())

    for symbol, table in formula.functions.tables.items():
        if not table.mapping:
            lines.append(f'fun {symbol}/{table.arity};')
            continue

        entries = []

        for key in sorted(table.mapping, key=universe.row_key):
            written = str(key[0]) if len(key) == 1 else f'({_row(key)})'
            entries.append(f'{written} -> {table.mapping[key]}')

        lines.append(f'fun {symbol}/{table.arity} {{ {", ".join(entries)} }};')

    for symbol in sorted(formula.facts):
        for row in sorted(formula.facts[symbol], key=universe.row_key):
            lines.append(f'fact {symbol}({_row(row)}).' if row else f'fact {symbol}.')

    lines.extend(format_clause(clause) for clause in formula.layers)

    return '\n'.join(lines) + '\n'


def print_model(rho: Interpretation, universe: Universe) -> str:
    """Tab separated listing of `rho`.

    One line per row, relations in alphabetical order, rows in universe order. Generated
    relations and empty relations are left out.
    """
    lines = []

    for symbol in sorted(rho):
        if symbol.startswith(RESERVED_PREFIX):
            continue

        for row in sorted(rho[symbol], key=universe.row_key):
            lines.append('\t'.join([symbol, *(str(atom) for atom in row)]))

    return ''.join(f'{line}\n' for line in lines)
