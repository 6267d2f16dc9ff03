"""Bottom-up solver: dualize constrain layers, ground, rewrite to simple clauses, propagate."""

from .dualize import DualLayers, completed_recovery, dualize
from .gfp import gfp_iterate
from .grounding import GroundAnd, GroundAtom, GroundDefinition, GroundFragment, GroundOr, ground, nesting_depth
from .propagate import propagate
from .rewrite import SimpleClause, fresh_symbols, rewrite_simple
from .solver import LayerStats, Solver, solve
from .symbols import complement_symbol, is_complement

__all__ = (
    'DualLayers', 'completed_recovery', 'dualize',
    'gfp_iterate',
    'GroundAnd', 'GroundAtom', 'GroundDefinition', 'GroundFragment', 'GroundOr', 'ground', 'nesting_depth',
    'propagate',
    'SimpleClause', 'fresh_symbols', 'rewrite_simple',
    'LayerStats', 'Solver', 'solve',
    'complement_symbol', 'is_complement',
)
