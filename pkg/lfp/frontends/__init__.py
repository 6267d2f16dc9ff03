"""Compilers of classical analysis problems into layered formulae, with reference oracles."""

from .base import BaseDecoder, BaseFrontend
from .csp import CspFrontend
from .ctl import CtlFrontend
from .dataflow import DataflowFrontend
from .exceptions import CfgError, CspError, CtlError, FrontendError, KripkeError, LineMatchError

__all__ = (
    'BaseDecoder', 'BaseFrontend', 'CspFrontend', 'CtlFrontend', 'DataflowFrontend',
    'CfgError', 'CspError', 'CtlError', 'FrontendError', 'KripkeError', 'LineMatchError',
)
