from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .clauses import Clause, asserted_relations, body_free_variables, implications
from .conditions import queries
from .exceptions import FormulaError, SignatureError
from .terms import FunctionApp, FunctionEnv, Term, Variable
from .universe import Row, Universe

# Symbols starting with this prefix are generated by the engine and rejected in programs.
RESERVED_PREFIX = '__'


class Interpretation:
    """Finite mapping from relation symbols to sets of rows.

    Instances are immutable; the `with_*` methods return new interpretations.
    Two interpretations are equal when they interpret the same symbols the same way.
    """

    __slots__ = ('_relations', )

    def __init__(self, relations: Mapping[str, Iterable[Row]] | None = None) -> None:
        self._relations: dict[str, frozenset[Row]] = {
            symbol: frozenset(tuple(row) for row in rows) for symbol, rows in (relations or {}).items()
        }

    @classmethod
    def empty(cls, symbols: Iterable[str]) -> 'Interpretation':
        return cls({symbol: () for symbol in symbols})

    def __getitem__(self, symbol: str) -> frozenset[Row]:
        try:
            return self._relations[symbol]
        except KeyError:
            raise SignatureError(f'Relation "{symbol}" is not interpreted.') from None

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._relations

    def __iter__(self) -> Iterator[str]:
        return iter(self._relations)

    def __len__(self) -> int:
        return len(self._relations)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interpretation):
            return NotImplemented

        return self._relations == other._relations

    def __hash__(self) -> int:
        return hash(frozenset(self._relations.items()))

    def __repr__(self) -> str:
        inner = ', '.join(f'{symbol}={sorted(rows, key=repr)}' for symbol, rows in sorted(self._relations.items()))
        return f'Interpretation({inner})'

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(self._relations)

    def items(self) -> Iterator[tuple[str, frozenset[Row]]]:
        return iter(self._relations.items())

    def with_relations(self, relations: Mapping[str, Iterable[Row]]) -> 'Interpretation':
        merged: dict[str, Iterable[Row]] = dict(self._relations)
        merged.update(relations)
        return Interpretation(merged)

    def without(self, predicate) -> 'Interpretation':
        """Drop every symbol for which `predicate(symbol)` holds."""
        return Interpretation({symbol: rows for symbol, rows in self._relations.items() if not predicate(symbol)})

    def validate(self, universe: Universe, signature: Mapping[str, int]) -> None:
        """Check that every row is made of universe atoms and has the declared arity.

        Raises:
            SignatureError: On an undeclared symbol, a wrong arity or an atom outside the universe.
        """
        for symbol, rows in self._relations.items():
            if symbol not in signature:
                raise SignatureError(f'Relation "{symbol}" is not declared.')

            for row in rows:
                if len(row) != signature[symbol]:
                    raise SignatureError(f'Row {row} of "{symbol}" does not have arity {signature[symbol]}.')

                for atom in row:
                    if atom not in universe:
                        raise SignatureError(f'Row {row} of "{symbol}" mentions {atom!r}, which is not in the universe.')


class RelationKind(Enum):
    FACT = 'fact'
    DEFINED = 'defined'
    CONSTRAINED = 'constrained'


@dataclass(frozen=True)
class RankEntry:
    rank: int
    kind: RelationKind


@dataclass(frozen=True)
class RankMap:
    """Rank and kind of every relation of a stratified formula.

    Attributes:
        entries:
            Rank entry by relation symbol.
        order:
            Number of layers `s` of the formula.
    """

    entries: Mapping[str, RankEntry]
    order: int

    def __post_init__(self) -> None:
        for symbol, entry in self.entries.items():
            if (entry.rank == 0) != (entry.kind is RelationKind.FACT):
                raise FormulaError(f'Relation "{symbol}" has rank {entry.rank} but kind {entry.kind.value}.')

    def __getitem__(self, symbol: str) -> RankEntry:
        try:
            return self.entries[symbol]
        except KeyError:
            raise SignatureError(f'Relation "{symbol}" has no rank.') from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def rank(self, symbol: str) -> int:
        return self[symbol].rank

    def kind(self, symbol: str) -> RelationKind:
        return self[symbol].kind

    def at(self, rank: int) -> tuple[str, ...]:
        """Relations of exactly `rank`, sorted by name."""
        return tuple(sorted(symbol for symbol, entry in self.entries.items() if entry.rank == rank))


@dataclass(frozen=True, eq=False)
class LayeredFormula:
    """Parsed LFP program.

    Attributes:
        universe:
            Finite universe all quantifiers range over.
        signature:
            Arity of every relation symbol.
        functions:
            Interpretation of the function symbols.
        facts:
            Rank-0 knowledge; interprets every relation no layer asserts.
        layers:
            Clauses `cl_1 .. cl_s` in order.

    Raises:
        SignatureError: If a layer uses an undeclared symbol or a wrong arity.
        FormulaError: If a clause is open, a fact names an asserted relation or a generated symbol is used.
    """

    universe: Universe
    signature: Mapping[str, int]
    functions: FunctionEnv
    facts: Interpretation
    layers: tuple[Clause, ...]
    _asserted: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        asserted: set[str] = set()

        for index, clause in enumerate(self.layers, start=1):
            open_variables = body_free_variables(clause.body)

            if open_variables:
                raise FormulaError(f'Layer {index} is not closed, free variables: {sorted(open_variables)}')

            for implication in implications(clause.body):
                self._check_atom(implication.head.relation, implication.head.args, index)

                for query in queries(implication.cond):
                    self._check_atom(query.relation, query.args, index)

            asserted |= asserted_relations(clause)

        for symbol in self.signature:
            if symbol.startswith(RESERVED_PREFIX):
                raise FormulaError(f'Relation "{symbol}" uses the reserved prefix "{RESERVED_PREFIX}".')

        for symbol in self.facts:
            if symbol in asserted and self.facts[symbol]:
                raise FormulaError(f'Facts are given for "{symbol}", which is asserted by a layer.')

        self.facts.validate(self.universe, self.signature)
        object.__setattr__(self, '_asserted', frozenset(asserted))

    def _check_atom(self, relation: str, args: tuple[Term, ...], layer: int) -> None:
        if relation not in self.signature:
            raise SignatureError(f'Layer {layer} uses undeclared relation "{relation}".')

        if len(args) != self.signature[relation]:
            raise SignatureError(
                f'Layer {layer} uses "{relation}" with {len(args)} arguments, declared arity is {self.signature[relation]}.'
            )

        for arg in args:
            self._check_term(arg, layer)

    def _check_term(self, term: Term, layer: int) -> None:
        match term:
            case Variable():
                return
            case FunctionApp(symbol, args):
                arity = self.functions.arity(symbol)

                if arity != len(args):
                    raise SignatureError(f'Layer {layer} applies "{symbol}" to {len(args)} arguments, its arity is {arity}.')

                for arg in args:
                    self._check_term(arg, layer)

    @property
    def order(self) -> int:
        return len(self.layers)

    @property
    def asserted(self) -> frozenset[str]:
        """Relations asserted by some layer."""
        return self._asserted

    def initial_interpretation(self) -> Interpretation:
        """ϱ₀ completed with empty sets for every declared relation the facts leave out."""
        return Interpretation({symbol: self.facts[symbol] if symbol in self.facts else () for symbol in self.signature})
