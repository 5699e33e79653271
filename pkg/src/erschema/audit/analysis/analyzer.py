"""Rule-based preservation analysis of the classical transformation."""
from dataclasses import dataclass
from typing import Dict, List, Tuple

import pandas as pd

from erschema.audit import const
from erschema.audit.model.er import (Classification, ErModel, RelationshipKind,
                                     RelationshipType, Slot, constraint_slots,
                                     classify_relationship)
from erschema.audit.model.rds import RelationshipEncoding
from erschema.audit.tools import erschema_logger, get_erschema_logger
from erschema.audit.transform.transformer import place_fk, transform

from .verdicts import Justification, SlotVerdict, Verdict, VerdictKind


@dataclass(frozen=True)
class RelationshipReport:
    relationship_name: str
    classification: Classification
    encoding: RelationshipEncoding
    verdicts: Tuple[SlotVerdict, ...]

    def __post_init__(self):
        object.__setattr__(self, 'verdicts', tuple(self.verdicts))
        if len(self.verdicts) != 4 or len({v.slot for v in self.verdicts}) != 4:
            raise ValueError(f'Expected one verdict per slot for {self.relationship_name}')

    def verdict(self, slot: Slot) -> SlotVerdict:
        return next(v for v in self.verdicts if v.slot is slot)

    def count(self, kind: VerdictKind) -> int:
        return sum(1 for v in self.verdicts if v.verdict.kind is kind)


@dataclass(frozen=True)
class PreservationReport:
    relationships: Tuple[RelationshipReport, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'relationships', tuple(self.relationships))

    def relationship(self, name: str) -> RelationshipReport:
        for entry in self.relationships:
            if entry.relationship_name == name:
                return entry
        raise ValueError(f'No report for relationship {name}')


@dataclass(frozen=True, eq=False)
class PreservationSummary:
    """Per-relationship counts and loss ratios, plus model-wide totals."""
    per_relationship: pd.DataFrame

    @property
    def totals(self) -> Dict[str, int]:
        frame = self.per_relationship
        return {
            'relationships': int(len(frame)),
            'exact': int(frame['exact'].sum()),
            'lower_bound': int(frame['lower_bound'].sum()),
            'lost': int(frame['lost'].sum()),
        }


def _fk_verdicts(rel: RelationshipType, classification: Classification) -> List[SlotVerdict]:
    holder = place_fk(rel).holder_side
    many_side_tag = Justification.CASE_2 if classification.kind is RelationshipKind.ONE_TO_MANY \
        else Justification.CASE_1C
    rules = {
        Slot.of(holder, 'max'): (Verdict.exact(1), Justification.CASE_1A),
        Slot.of(holder, 'min'): (Verdict.not_represented(), Justification.CASE_1B),
        Slot.of(holder.other, 'max'): (Verdict.not_represented(), many_side_tag),
        Slot.of(holder.other, 'min'): (Verdict.not_represented(), Justification.CASE_1D),
    }
    return [SlotVerdict(cs.slot, *rules[cs.slot], source_value=cs.value) for cs in constraint_slots(rel)]


def _junction_verdicts(rel: RelationshipType) -> List[SlotVerdict]:
    verdicts = []
    for cs in constraint_slots(rel):
        if cs.slot.bound == 'max':
            verdicts.append(SlotVerdict(cs.slot, Verdict.lower_bound_only(1), Justification.CASE_3_MAX, cs.value))
        else:
            verdicts.append(SlotVerdict(cs.slot, Verdict.not_represented(), Justification.CASE_3_MIN, cs.value))
    return verdicts


def relationship_verdicts(rel: RelationshipType) -> List[SlotVerdict]:
    """Verdicts for one relationship, in slot order.

    They depend only on the classification and, for FK encodings, on the
    side holding the FK.
    """
    classification = classify_relationship(rel)
    if classification.kind is RelationshipKind.MANY_TO_MANY:
        return _junction_verdicts(rel)
    return _fk_verdicts(rel, classification)


@erschema_logger
def analyze(model: ErModel) -> PreservationReport:
    """State, per relationship and slot, whether the transformed RDS keeps the value.

    Parameters
    ----------
    model : ErModel
        A valid model.

    Returns
    -------
    PreservationReport
        Four verdicts per relationship. 1:1 and 1:N keep only the FK
        holder's max (``Exact(1)``); M:N keeps only "greater than one" for
        both maxes; every min is lost.

    Raises
    ------
    InvalidModelError: When the model breaks an ER invariant

    """
    schema = transform(model)
    entries = []
    for rel in model.relationships:
        entries.append(RelationshipReport(rel.name, classify_relationship(rel),
                                          schema.encoding(rel.name), tuple(relationship_verdicts(rel))))
    get_erschema_logger().info('Analyzed %d relationship(s)', len(entries))
    return PreservationReport(tuple(entries))


def summarize(report: PreservationReport) -> PreservationSummary:
    """Count verdicts per relationship; loss ratio is the share of non-Exact slots."""
    rows = []
    for entry in report.relationships:
        exact = entry.count(VerdictKind.EXACT)
        rows.append({
            'relationship': entry.relationship_name,
            'classification': str(entry.classification),
            'exact': exact,
            'lower_bound': entry.count(VerdictKind.LOWER_BOUND_ONLY),
            'lost': entry.count(VerdictKind.NOT_REPRESENTED),
            'loss_ratio': (len(entry.verdicts) - exact) / len(entry.verdicts),
        })
    return PreservationSummary(pd.DataFrame(rows, columns=const.SUMMARY_COLUMNS))


def lost_constraints(report: PreservationReport) -> List[Tuple[str, Slot, str]]:
    """Every ER value the RDS does not represent exactly, as (relationship, slot, value)."""
    return [(entry.relationship_name, verdict.slot, str(verdict.source_value))
            for entry in report.relationships
            for verdict in entry.verdicts if not verdict.verdict.is_exact]
