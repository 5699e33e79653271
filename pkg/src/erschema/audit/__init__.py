"""
    Audit which ER structural constraints survive the classical ER-to-relational transformation.
"""
__all__ = [
    'model', 'text', 'transform', 'analysis', 'oracle', 'tools', 'const',
    'Audit', 'Verification', 'parse_er', 'render_er', 'render_rds', 'analyze', 'summarize',
    'inverse_image_verdicts', 'instance_verdicts', 'erschema_logger', 'get_erschema_logger'
]

from . import const
from .__version__ import __version__
from .analysis import analyze, summarize
from .audit import Audit, Verification
from .oracle import instance_verdicts, inverse_image_verdicts
from .text import parse_er, render_er, render_rds
from .tools import erschema_logger, get_erschema_logger

version = __version__
