"""Stratification check and rank computation."""

from .stratify import LayerUsage, UsageReport, check_stratification, usage

__all__ = ('LayerUsage', 'UsageReport', 'check_stratification', 'usage', )
