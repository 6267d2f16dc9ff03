import re
from dataclasses import dataclass
from enum import Enum

from model import RESERVED_PREFIX, ParseError


class TokenKind(Enum):
    NAME = 'name'
    NUMBER = 'number'
    SYMBOL = 'symbol'
    END = 'end'


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int

    def __str__(self) -> str:
        return 'end of input' if self.kind is TokenKind.END else f'"{self.text}"'


KEYWORDS = frozenset({'universe', 'rel', 'fun', 'fact', 'define', 'constrain', 'forall', 'exists', 'true', 'false'})

TOKEN_PATTERN = re.compile(r"""
    (?P<skip>[ \t\r]+|\#[^\n]*)
  | (?P<newline>\n)
  | (?P<symbol>->|=>|\.\.|[{}(),;:./&|!])
  | (?P<number>-?\d+)
  | (?P<name>[A-Za-z_][\w']*)
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    """Split program text into tokens, ending with an `END` token.

    Raises:
        ParseError: On a character no token starts with, or a name using the reserved prefix.
    """
    tokens: list[Token] = []
    line, line_start, position = 1, 0, 0

    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        column = position - line_start + 1

        if match is None:
            raise ParseError(f'Unexpected character "{text[position]}".', line, column)

        kind = match.lastgroup
        value = match.group()

        if kind == 'newline':
            line, line_start = line + 1, match.end()
        elif kind == 'name':
            if value.startswith(RESERVED_PREFIX):
                raise ParseError(f'Name "{value}" uses the reserved prefix "{RESERVED_PREFIX}".', line, column)

            tokens.append(Token(TokenKind.NAME, value, line, column))
        elif kind == 'number':
            tokens.append(Token(TokenKind.NUMBER, value, line, column))
        elif kind == 'symbol':
            tokens.append(Token(TokenKind.SYMBOL, value, line, column))

        position = match.end()

    tokens.append(Token(TokenKind.END, '', line, position - line_start + 1))

    return tokens
