"""Concrete syntax of LFP programs and of model files."""

from .lexer import Token, TokenKind, tokenize
from .parser import ProgramParser, parse_model, parse_program
from .printer import format_body, format_clause, format_condition, format_term, print_model, print_program

__all__ = (
    'Token', 'TokenKind', 'tokenize',
    'ProgramParser', 'parse_model', 'parse_program',
    'format_body', 'format_clause', 'format_condition', 'format_term', 'print_model', 'print_program',
)
