from dataclasses import dataclass, field
from typing import Mapping

from .exceptions import SignatureError
from .universe import Atom, Row, Universe

Valuation = Mapping[str, Atom]


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FunctionApp:
    """Application `symbol(args)`; with no arguments it is a constant."""

    symbol: str
    args: tuple['Term', ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol

        return f'{self.symbol}({", ".join(str(arg) for arg in self.args)})'


Term = Variable | FunctionApp


class _Undefined:
    """Value of a term whose function application leaves the universe."""

    _instance: '_Undefined | None' = None

    def __new__(cls) -> '_Undefined':
        if cls._instance is None:
            cls._instance = super().__new__(cls)

        return cls._instance

    def __repr__(self) -> str:
        return 'UNDEFINED'


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class FunctionTable:
    """User function given as a finite table; rows missing from `mapping` are undefined."""

    arity: int
    mapping: Mapping[Row, Atom] = field(default_factory=dict)


class FunctionEnv:
    """Interpretation of function symbols over a universe.

    Integer universes provide the built-ins `add` and `sub`, whose results are undefined
    when they fall outside the range. Nullary symbols that name a universe atom are constants.

    Attributes:
        universe:
            Universe the functions map into.
        tables:
            User declared functions by symbol.
    """

    BUILTINS: dict[str, int] = {'add': 2, 'sub': 2}

    def __init__(self, universe: Universe, tables: Mapping[str, FunctionTable] | None = None) -> None:
        self.universe = universe
        self.tables: dict[str, FunctionTable] = dict(tables or {})

        for symbol, table in self.tables.items():
            if symbol in self.BUILTINS and universe.is_integer:
                raise SignatureError(f'Function "{symbol}" is built in on integer universes and can not be redeclared.')

            for row, value in table.mapping.items():
                if len(row) != table.arity:
                    raise SignatureError(f'Row {row} of function "{symbol}" does not have arity {table.arity}.')

                if value not in universe or any(atom not in universe for atom in row):
                    raise SignatureError(f'Row {row} -> {value} of function "{symbol}" leaves the universe.')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FunctionEnv):
            return NotImplemented

        return self.universe == other.universe and self.tables == other.tables

    def arity(self, symbol: str) -> int:
        """Return the arity of `symbol`.

        Raises:
            SignatureError: If `symbol` is neither declared, built in, nor a universe atom.
        """
        if symbol in self.tables:
            return self.tables[symbol].arity

        if symbol in self.BUILTINS and self.universe.is_integer:
            return self.BUILTINS[symbol]

        if self.universe.lookup(symbol) is not None:
            return 0

        raise SignatureError(f'Unknown function symbol "{symbol}".')

    def apply(self, symbol: str, args: Row) -> Atom | _Undefined:
        if len(args) != self.arity(symbol):
            raise SignatureError(f'Function "{symbol}" expects {self.arity(symbol)} arguments, got {len(args)}.')

        if symbol in self.tables:
            return self.tables[symbol].mapping.get(args, UNDEFINED)

        if not args:
            return self.universe.lookup(symbol)

        match symbol:
            case 'add':
                value = args[0] + args[1]
            case 'sub':
                value = args[0] - args[1]

        return value if value in self.universe else UNDEFINED


def eval_term(term: Term, functions: FunctionEnv, valuation: Valuation) -> Atom | _Undefined:
    """Evaluate `term` to a universe atom.

    Args:
        term:
            Term to evaluate.
        functions:
            Interpretation of the function symbols.
        valuation:
            Binding of every variable occurring in `term`.

    Returns:
        The atom, or `UNDEFINED` if some application along the way is undefined.

    Raises:
        SignatureError: If `term` applies an unknown function symbol.
    """
    match term:
        case Variable(name):
            return valuation[name]
        case FunctionApp(symbol, args):
            values = []

            for arg in args:
                value = eval_term(arg, functions, valuation)

                if value is UNDEFINED:
                    return UNDEFINED

                values.append(value)

            return functions.apply(symbol, tuple(values))


def eval_terms(terms: tuple[Term, ...], functions: FunctionEnv, valuation: Valuation) -> Row | _Undefined:
    """Pointwise `eval_term`; undefined as soon as one component is."""
    row = []

    for term in terms:
        value = eval_term(term, functions, valuation)

        if value is UNDEFINED:
            return UNDEFINED

        row.append(value)

    return tuple(row)


def term_variables(term: Term) -> frozenset[str]:
    match term:
        case Variable(name):
            return frozenset({name})
        case FunctionApp(_, args):
            return frozenset().union(*(term_variables(arg) for arg in args))
