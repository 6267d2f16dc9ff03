"""Domain types for LFP syntax, universes and interpretations shared by every other package."""

from .clauses import (
    Assertion, Body, BodyAnd, BodyForall, Clause, ClauseKind, ConImplies, DefImplies,
    asserted_relations, conjoin_bodies, forall, implications, used_relations,
)
from .conditions import (
    FALSE, TRUE, And, Condition, Exists, Forall, NegQuery, Or, Query, Truth,
    condition_depth, conjoin, negate, queries,
)
from .exceptions import (
    FormulaError, LatticeError, LfpError, ParseError, SignatureError, StratificationError, UniverseError,
)
from .formula import RESERVED_PREFIX, Interpretation, LayeredFormula, RankEntry, RankMap, RelationKind
from .terms import (
    UNDEFINED, FunctionApp, FunctionEnv, FunctionTable, Term, Valuation, Variable, eval_term, eval_terms,
)
from .universe import Atom, Row, Universe

__all__ = (
    'Assertion', 'Body', 'BodyAnd', 'BodyForall', 'Clause', 'ClauseKind', 'ConImplies', 'DefImplies',
    'asserted_relations', 'conjoin_bodies', 'forall', 'implications', 'used_relations',
    'FALSE', 'TRUE', 'And', 'Condition', 'Exists', 'Forall', 'NegQuery', 'Or', 'Query', 'Truth',
    'condition_depth', 'conjoin', 'negate', 'queries',
    'FormulaError', 'LatticeError', 'LfpError', 'ParseError', 'SignatureError', 'StratificationError', 'UniverseError',
    'RESERVED_PREFIX', 'Interpretation', 'LayeredFormula', 'RankEntry', 'RankMap', 'RelationKind',
    'UNDEFINED', 'FunctionApp', 'FunctionEnv', 'FunctionTable', 'Term', 'Valuation', 'Variable', 'eval_term', 'eval_terms',
    'Atom', 'Row', 'Universe',
)
