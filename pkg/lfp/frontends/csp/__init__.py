"""Arc consistency of binary constraint problems compiled into LFP."""

from .csp import CspFrontend, Domains, ac3_oracle, csp_formula, domain_relation
from .decoder import CspDecoder
from .problem import Constraint, Csp, DifferenceConstraint, TableConstraint, UnaryConstraint

__all__ = (
    'CspFrontend', 'Domains', 'ac3_oracle', 'csp_formula', 'domain_relation',
    'CspDecoder',
    'Constraint', 'Csp', 'DifferenceConstraint', 'TableConstraint', 'UnaryConstraint',
)
