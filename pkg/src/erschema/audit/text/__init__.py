"""
    Define the ER notation parser and the model and schema printers.
"""
__all__ = ['parse_er', 'render_er', 'render_relationship', 'render_rds', 'schema_to_dict', 'dumps',
           'SourceSpan', 'Diagnostic', 'parser', 'printer']

from .parser import Diagnostic, SourceSpan, parse_er
from .printer import (dumps, render_er, render_rds, render_relationship,
                      schema_to_dict)
