"""Satisfaction relations used as the ground truth for the engine."""

from .satisfaction import layer_report, sat_body, sat_clause, sat_cond, sat_formula

__all__ = ('layer_report', 'sat_body', 'sat_clause', 'sat_cond', 'sat_formula', )
