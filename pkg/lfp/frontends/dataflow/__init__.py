"""Bit-vector dataflow analyses compiled into a single LFP layer."""

from .cfg import Cfg, Direction, Modality
from .dataflow import AnalysisResult, DataflowFrontend, dataflow_formula, dataflow_oracle
from .decoder import CfgDecoder

__all__ = (
    'Cfg', 'Direction', 'Modality', 'AnalysisResult', 'DataflowFrontend', 'dataflow_formula', 'dataflow_oracle',
    'CfgDecoder',
)
