"""Lexicographic order, meets and model enumeration over interpretations of one formula."""

from .enumerate import all_interpretations, models_above
from .order import layer_leq, lex_leq, meet

__all__ = ('all_interpretations', 'models_above', 'layer_leq', 'lex_leq', 'meet', )
