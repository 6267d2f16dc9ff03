from dataclasses import dataclass

from model import (
    FALSE, TRUE, And, Assertion, Atom, Body, BodyAnd, BodyForall, Clause, ClauseKind, Condition, ConImplies,
    DefImplies, Exists, Forall, FunctionApp, FunctionEnv, FunctionTable, Interpretation, LayeredFormula, Or,
    ParseError, Query, SignatureError, Term, Universe, UniverseError, Variable, negate,
)

from .lexer import KEYWORDS, Token, TokenKind, tokenize


@dataclass(frozen=True)
class _Atom:
    relation: str
    args: tuple[Term, ...]
    token: Token


@dataclass(frozen=True)
class _Not:
    operand: '_Node'
    token: Token


@dataclass(frozen=True)
class _Binary:
    operator: str
    left: '_Node'
    right: '_Node'
    token: Token


@dataclass(frozen=True)
class _Quantified:
    quantifier: str
    var: str
    body: '_Node'
    token: Token


@dataclass(frozen=True)
class _Truth:
    value: bool
    token: Token


_Node = _Atom | _Not | _Binary | _Quantified | _Truth


class ProgramParser:
    """Recursive descent parser of LFP programs.

    ```
    universe {a, b};
    rel eq/2;
    rel neq/2;
    define { forall x: true => eq(x, x) }
    define { forall x: forall y: !eq(x, y) => neq(x, y) }
    ```
    Inside a layer `!` binds tighter than `&`, then `|`, then `=>`; `,` separates top level
    conjuncts; a quantifier extends to the next unbalanced `)`, top level `,` or the end of the block.
    """

    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.position = 0
        self.universe: Universe | None = None
        self.signature: dict[str, int] = {}
        self.tables: dict[str, FunctionTable] = {}
        self.functions: FunctionEnv | None = None
        self.bound: list[str] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def advance(self) -> Token:
        token = self.current

        if token.kind is not TokenKind.END:
            self.position += 1

        return token

    def at(self, text: str) -> bool:
        return self.current.kind in (TokenKind.SYMBOL, TokenKind.NAME) and self.current.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f'Expected "{text}" but found {self.current}.')

        return self.advance()

    def expect_name(self, what: str) -> Token:
        if self.current.kind is not TokenKind.NAME or self.current.text in KEYWORDS:
            raise self.error(f'Expected {what} but found {self.current}.')

        return self.advance()

    def expect_number(self) -> int:
        if self.current.kind is not TokenKind.NUMBER:
            raise self.error(f'Expected a number but found {self.current}.')

        return int(self.advance().text)

    def parse(self) -> LayeredFormula:
        self.universe = self.parse_universe()

        while self.at('rel') or self.at('fun'):
            self.parse_declaration()

        try:
            self.functions = FunctionEnv(self.universe, self.tables)
        except SignatureError as e:
            raise self.error(str(e)) from e

        facts: dict[str, set] = {}

        while self.at('fact'):
            relation, row = self.parse_fact()
            facts.setdefault(relation, set()).add(row)

        layers = []

        while self.at('define') or self.at('constrain'):
            layers.append(self.parse_layer())

        if self.current.kind is not TokenKind.END:
            raise self.error(f'Expected "define", "constrain" or the end of the program but found {self.current}.')

        if not layers:
            raise self.error('A program needs at least one layer.')

        return LayeredFormula(self.universe, self.signature, self.functions, Interpretation(facts), tuple(layers))

    def parse_universe(self) -> Universe:
        start = self.expect('universe')

        try:
            if self.at('{'):
                self.advance()
                atoms = [self.parse_literal_atom()]

                while self.at(','):
                    self.advance()
                    atoms.append(self.parse_literal_atom())

                self.expect('}')
                universe = Universe(tuple(atoms))
            else:
                low = self.expect_number()
                self.expect('..')
                universe = Universe.integer_range(low, self.expect_number())
        except UniverseError as e:
            raise self.error(str(e), start) from e

        self.expect(';')

        return universe

    def parse_literal_atom(self) -> Atom:
        token = self.advance()

        if token.kind is TokenKind.NUMBER:
            return int(token.text)

        if token.kind is TokenKind.NAME and token.text not in KEYWORDS:
            return token.text

        raise self.error(f'Expected an atom but found {token}.', token)

    def parse_atom_of_universe(self) -> Atom:
        token = self.current

        if token.kind not in (TokenKind.NAME, TokenKind.NUMBER):
            raise self.error(f'Expected an atom but found {token}.')

        atom = self.universe.lookup(token.text)

        if atom is None:
            raise self.error(f'"{token.text}" is not an atom of the universe.')

        self.advance()

        return atom

    def parse_declaration(self) -> None:
        keyword = self.advance().text
        name = self.expect_name('a symbol name')
        self.expect('/')
        arity = self.expect_number()

        if name.text in self.signature or name.text in self.tables:
            raise self.error(f'Symbol "{name.text}" is declared twice.', name)

        if keyword == 'rel':
            self.signature[name.text] = arity
        else:
            self.tables[name.text] = FunctionTable(arity, self.parse_table(arity) if self.at('{') else {})

        self.expect(';')

    def parse_table(self, arity: int) -> dict[tuple[Atom, ...], Atom]:
        self.expect('{')
        mapping: dict[tuple[Atom, ...], Atom] = {}

        while not self.at('}'):
            if mapping:
                self.expect(',')

            if self.at('('):
                self.advance()
                key = [] if self.at(')') else [self.parse_atom_of_universe()]

                while self.at(','):
                    self.advance()
                    key.append(self.parse_atom_of_universe())

                self.expect(')')
            else:
                key = [self.parse_atom_of_universe()]

            if len(key) != arity:
                raise self.error(f'Table entry has {len(key)} arguments, expected {arity}.')

            self.expect('->')
            mapping[tuple(key)] = self.parse_atom_of_universe()

        self.expect('}')

        return mapping

    def parse_fact(self) -> tuple[str, tuple[Atom, ...]]:
        self.expect('fact')
        name = self.expect_name('a relation name')
        row: list[Atom] = []

        if self.at('('):
            self.advance()

            if not self.at(')'):
                row.append(self.parse_atom_of_universe())

                while self.at(','):
                    self.advance()
                    row.append(self.parse_atom_of_universe())

            self.expect(')')

        self.check_relation(name, len(row))
        self.expect('.')

        return name.text, tuple(row)

    def check_relation(self, name: Token, arity: int) -> None:
        if name.text not in self.signature:
            raise self.error(f'Relation "{name.text}" is not declared.', name)

        if self.signature[name.text] != arity:
            raise self.error(f'Relation "{name.text}" has arity {self.signature[name.text]}, used with {arity} arguments.', name)

    def parse_layer(self) -> Clause:
        kind = ClauseKind(self.advance().text)
        self.expect('{')

        if self.at('}'):
            raise self.error('A layer must contain at least one clause.')

        node = self.parse_conjuncts('}')
        self.expect('}')

        return Clause(kind, self.to_body(node, kind))

    def parse_conjuncts(self, closing: str) -> _Node:
        """Top level conjuncts separated by `,` up to `closing`."""
        node = self.parse_expression()

        while self.at(','):
            token = self.advance()
            node = _Binary('&', node, self.parse_expression(), token)

        if not self.at(closing):
            raise self.error(f'Expected "," or "{closing}" but found {self.current}.')

        return node

    def parse_expression(self) -> _Node:
        left = self.parse_binary('|')

        if self.at('=>'):
            token = self.advance()
            return _Binary('=>', left, self.parse_binary('|'), token)

        return left

    def parse_binary(self, operator: str) -> _Node:
        operand = (lambda: self.parse_binary('&')) if operator == '|' else self.parse_unary
        node = operand()

        while self.at(operator):
            token = self.advance()
            node = _Binary(operator, node, operand(), token)

        return node

    def parse_unary(self) -> _Node:
        token = self.current

        if self.at('!'):
            self.advance()
            return _Not(self.parse_unary(), token)

        if self.at('forall') or self.at('exists'):
            return self.parse_quantified()

        if self.at('('):
            self.advance()
            node = self.parse_conjuncts(')')
            self.expect(')')
            return node

        if self.at('true') or self.at('false'):
            self.advance()
            return _Truth(token.text == 'true', token)

        return self.parse_query()

    def parse_quantified(self) -> _Node:
        token = self.advance()
        variables = [self.expect_name('a variable').text]

        while self.current.kind is TokenKind.NAME and not self.at(':'):
            variables.append(self.expect_name('a variable').text)

        self.expect(':')
        self.bound.extend(variables)

        try:
            node = self.parse_expression()
        finally:
            del self.bound[-len(variables):]

        for var in reversed(variables):
            node = _Quantified(token.text, var, node, token)

        return node

    def parse_query(self) -> _Atom:
        name = self.expect_name('a relation, "!", "(", a quantifier, "true" or "false"')
        args: list[Term] = []

        if self.at('('):
            self.advance()
            args = self.parse_terms()
            self.expect(')')

        self.check_relation(name, len(args))

        return _Atom(name.text, tuple(args), name)

    def parse_terms(self) -> list[Term]:
        if self.at(')'):
            return []

        terms = [self.parse_term()]

        while self.at(','):
            self.advance()
            terms.append(self.parse_term())

        return terms

    def parse_term(self) -> Term:
        token = self.current

        if token.kind is TokenKind.NUMBER:
            self.advance()

            if self.universe.lookup(token.text) is None:
                raise self.error(f'{token.text} is not an atom of the universe.', token)

            return FunctionApp(token.text)

        name = self.expect_name('a term')

        if self.at('('):
            self.advance()
            args = tuple(self.parse_terms())
            self.expect(')')
            self.check_function(name, len(args))
            return FunctionApp(name.text, args)

        if name.text in self.bound:
            return Variable(name.text)

        self.check_function(name, 0)

        return FunctionApp(name.text)

    def check_function(self, name: Token, arity: int) -> None:
        try:
            declared = self.functions.arity(name.text)
        except SignatureError:
            what = 'function' if arity else 'variable, constant or atom'
            raise self.error(f'Unknown {what} "{name.text}".', name) from None

        if declared != arity:
            raise self.error(f'Function "{name.text}" has arity {declared}, applied to {arity} arguments.', name)

    def to_body(self, node: _Node, kind: ClauseKind) -> Body:
        match node:
            case _Quantified('forall', var, inner, _):
                return BodyForall(var, self.to_body(inner, kind))
            case _Binary('&', left, right, _):
                return BodyAnd(self.to_body(left, kind), self.to_body(right, kind))
            case _Binary('=>', left, right, _) if kind is ClauseKind.DEFINE:
                return DefImplies(self.to_condition(left), self.to_head(right))
            case _Binary('=>', left, right, _):
                return ConImplies(self.to_head(left), self.to_condition(right))
            case _Atom() if kind is ClauseKind.DEFINE:
                return DefImplies(TRUE, self.to_head(node))
            case _Not(_Atom() as atom, _) if kind is ClauseKind.CONSTRAIN:
                return ConImplies(self.to_head(atom), FALSE)
            case _:
                raise self.error(f'Expected an implication in a {kind.value} layer.', node.token)

    def to_head(self, node: _Node) -> Assertion:
        if not isinstance(node, _Atom):
            raise self.error('Expected a single relation on this side of "=>".', node.token)

        return Assertion(node.relation, node.args)

    def to_condition(self, node: _Node) -> Condition:
        match node:
            case _Atom(relation, args, _):
                return Query(relation, args)
            case _Truth(value, _):
                return TRUE if value else FALSE
            case _Not(operand, _):
                return negate(self.to_condition(operand))
            case _Binary('&', left, right, _):
                return And(self.to_condition(left), self.to_condition(right))
            case _Binary('|', left, right, _):
                return Or(self.to_condition(left), self.to_condition(right))
            case _Quantified('exists', var, inner, _):
                return Exists(var, self.to_condition(inner))
            case _Quantified('forall', var, inner, _):
                return Forall(var, self.to_condition(inner))
            case _:
                raise self.error('Unexpected "=>" inside a condition.', node.token)


def parse_program(text: str) -> LayeredFormula:
    """Parse the concrete syntax of an LFP program.

    Raises:
        ParseError: With line and column, on syntax errors, undeclared or misused symbols,
            unknown atoms, reserved names and empty layers.
        FormulaError: If a fact names a relation some layer asserts.
    """
    return ProgramParser(text).parse()


def parse_model(text: str, formula: LayeredFormula) -> Interpretation:
    """Read an interpretation written by `print_model`.

    Fields may be separated by tabs or spaces; `#` starts a comment. Relations of `formula`
    that no line mentions are empty.

    Raises:
        ParseError: On an undeclared relation, a wrong number of atoms or an unknown atom.
    """
    rows: dict[str, set] = {symbol: set() for symbol in formula.signature}

    for number, line in enumerate(text.splitlines(), start=1):
        fields = line.split('#', 1)[0].split()

        if not fields:
            continue

        symbol, *atoms = fields

        if symbol not in formula.signature:
            raise ParseError(f'Relation "{symbol}" is not declared by the program.', number, 1)

        if len(atoms) != formula.signature[symbol]:
            raise ParseError(f'Relation "{symbol}" has arity {formula.signature[symbol]}, got {len(atoms)} atoms.', number, 1)

        row = []

        for text_atom in atoms:
            atom = formula.universe.lookup(text_atom)

            if atom is None:
                raise ParseError(f'"{text_atom}" is not an atom of the universe.', number, line.index(text_atom) + 1)

            row.append(atom)

        rows[symbol].add(tuple(row))

    return Interpretation(rows)
