"""
    Define the preservation verdicts and the rule-based analyzer.
"""
__all__ = ['Verdict', 'VerdictKind', 'Justification', 'SlotVerdict', 'explain',
           'RelationshipReport', 'PreservationReport', 'PreservationSummary',
           'analyze', 'summarize', 'lost_constraints', 'relationship_verdicts',
           'verdicts', 'analyzer']

from .analyzer import (PreservationReport, PreservationSummary, RelationshipReport,
                       analyze, lost_constraints, relationship_verdicts, summarize)
from .verdicts import Justification, SlotVerdict, Verdict, VerdictKind, explain
