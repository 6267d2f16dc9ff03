import re
from dataclasses import dataclass

from frontends.exceptions import CtlError


@dataclass(frozen=True)
class CtlTrue:
    def __str__(self) -> str:
        return 'true'


@dataclass(frozen=True)
class Atomic:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class CtlNot:
    operand: 'CtlFormula'

    def __str__(self) -> str:
        return f'!{self.operand}'


@dataclass(frozen=True)
class CtlAnd:
    left: 'CtlFormula'
    right: 'CtlFormula'

    def __str__(self) -> str:
        return f'({self.left} & {self.right})'


@dataclass(frozen=True)
class ExistsNext:
    operand: 'CtlFormula'

    def __str__(self) -> str:
        return f'EX {self.operand}'


@dataclass(frozen=True)
class AllNext:
    operand: 'CtlFormula'

    def __str__(self) -> str:
        return f'AX {self.operand}'


@dataclass(frozen=True)
class ExistsUntil:
    left: 'CtlFormula'
    right: 'CtlFormula'

    def __str__(self) -> str:
        return f'E[{self.left} U {self.right}]'


@dataclass(frozen=True)
class AllUntil:
    left: 'CtlFormula'
    right: 'CtlFormula'

    def __str__(self) -> str:
        return f'A[{self.left} U {self.right}]'


@dataclass(frozen=True)
class ExistsGlobally:
    operand: 'CtlFormula'

    def __str__(self) -> str:
        return f'EG {self.operand}'


@dataclass(frozen=True)
class AllGlobally:
    operand: 'CtlFormula'

    def __str__(self) -> str:
        return f'AG {self.operand}'


CtlFormula = CtlTrue | Atomic | CtlNot | CtlAnd | ExistsNext | AllNext | ExistsUntil | AllUntil | ExistsGlobally | AllGlobally

UNARY = {'EX': ExistsNext, 'AX': AllNext, 'EG': ExistsGlobally, 'AG': AllGlobally}


def ctl_false() -> CtlFormula:
    return CtlNot(CtlTrue())


def ctl_or(left: CtlFormula, right: CtlFormula) -> CtlFormula:
    return CtlNot(CtlAnd(CtlNot(left), CtlNot(right)))


def subformulas(phi: CtlFormula) -> list[CtlFormula]:
    """Distinct subformulas of `phi` in postorder; `phi` itself comes last."""
    seen: dict[CtlFormula, None] = {}

    def visit(formula: CtlFormula) -> None:
        match formula:
            case CtlNot(operand) | ExistsNext(operand) | AllNext(operand) | ExistsGlobally(operand) | AllGlobally(operand):
                visit(operand)
            case CtlAnd(left, right) | ExistsUntil(left, right) | AllUntil(left, right):
                visit(left)
                visit(right)

        seen.setdefault(formula, None)

    visit(phi)

    return list(seen)


def atomic_propositions(phi: CtlFormula) -> frozenset[str]:
    return frozenset(formula.name for formula in subformulas(phi) if isinstance(formula, Atomic))


TOKEN_PATTERN = re.compile(r'\s*(?:(?P<word>[A-Za-z_]\w*)|(?P<symbol>[!&|()\[\]]))')


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    position = 0

    while position < len(text):
        if text[position:].strip() == '':
            break

        match = TOKEN_PATTERN.match(text, position)

        if match is None:
            column = len(text[position:]) - len(text[position:].lstrip()) + position + 1
            raise CtlError(f'Unexpected character at column {column} of "{text}".')

        tokens.append((match.group('word') or match.group('symbol'), match.start(match.lastgroup) + 1))
        position = match.end()

    return tokens


def parse_ctl(text: str) -> CtlFormula:
    """Parse a CTL state formula.

    Accepts `true`, `false`, propositions, `!`, `&`, `|`, parentheses, `EX AX EF AF EG AG`,
    `E[f U g]` and `A[f U g]`; `!` and the temporal prefixes bind tighter than `&`, which binds tighter than `|`.
    `false`, `|`, `EF` and `AF` are rewritten into the other operators.

    Raises:
        CtlError: On a syntax error, with the column of the offending token.
    """
    tokens = _tokenize(text)
    position = 0

    def peek() -> str | None:
        return tokens[position][0] if position < len(tokens) else None

    def expect(token: str) -> None:
        nonlocal position

        if peek() != token:
            found = f'"{peek()}" at column {tokens[position][1]}' if peek() is not None else 'the end'
            raise CtlError(f'Expected "{token}" but found {found} in "{text}".')

        position += 1

    def disjunction() -> CtlFormula:
        nonlocal position
        result = conjunction()

        while peek() == '|':
            position += 1
            result = ctl_or(result, conjunction())

        return result

    def conjunction() -> CtlFormula:
        nonlocal position
        result = unary()

        while peek() == '&':
            position += 1
            result = CtlAnd(result, unary())

        return result

    def until(quantifier: type) -> CtlFormula:
        expect('[')
        left = disjunction()
        expect('U')
        right = disjunction()
        expect(']')
        return quantifier(left, right)

    def unary() -> CtlFormula:
        nonlocal position
        token = peek()

        if token is None:
            raise CtlError(f'Unexpected end of "{text}".')

        column = tokens[position][1]
        position += 1

        match token:
            case '!':
                return CtlNot(unary())
            case 'EF':
                return ExistsUntil(CtlTrue(), unary())
            case 'AF':
                return AllUntil(CtlTrue(), unary())
            case _ if token in UNARY:
                return UNARY[token](unary())
            case 'E' if peek() == '[':
                return until(ExistsUntil)
            case 'A' if peek() == '[':
                return until(AllUntil)
            case '(':
                result = disjunction()
                expect(')')
                return result
            case 'true':
                return CtlTrue()
            case 'false':
                return ctl_false()
            case _ if token[0].isalpha() or token[0] == '_':
                return Atomic(token)
            case _:
                raise CtlError(f'Unexpected "{token}" at column {column} of "{text}".')

    result = disjunction()

    if position != len(tokens):
        raise CtlError(f'Unexpected "{tokens[position][0]}" at column {tokens[position][1]} of "{text}".')

    return result
