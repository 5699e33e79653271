"""Preservation verdicts shared by the analyzer and the oracles."""
import enum
from dataclasses import dataclass
from typing import Optional

from erschema.audit.model.er import ONE, Cardinality, Slot


class VerdictKind(enum.Enum):
    EXACT = 'Exact'
    LOWER_BOUND_ONLY = 'LowerBoundOnly'
    NOT_REPRESENTED = 'NotRepresented'


@dataclass(frozen=True)
class Verdict:
    """Whether a constraint value can be read back from the schema.

    ``Exact(value)`` carries the value, ``LowerBoundOnly(threshold)`` states
    only that the value is greater than ``threshold``.
    """
    kind: VerdictKind
    value: Optional[Cardinality] = None
    threshold: Optional[int] = None

    @classmethod
    def exact(cls, value) -> 'Verdict':
        return cls(VerdictKind.EXACT, value=Cardinality.parse(value))

    @classmethod
    def lower_bound_only(cls, threshold: int = 1) -> 'Verdict':
        return cls(VerdictKind.LOWER_BOUND_ONLY, threshold=threshold)

    @classmethod
    def not_represented(cls) -> 'Verdict':
        return cls(VerdictKind.NOT_REPRESENTED)

    @property
    def is_exact(self) -> bool:
        return self.kind is VerdictKind.EXACT

    def to_dict(self) -> dict:
        data = {'verdict': self.kind.value}
        if self.kind is VerdictKind.EXACT:
            data['value'] = str(self.value)
        elif self.kind is VerdictKind.LOWER_BOUND_ONLY:
            data['threshold'] = self.threshold
        return data

    def __str__(self):
        if self.kind is VerdictKind.EXACT:
            return f'Exact({self.value})'
        if self.kind is VerdictKind.LOWER_BOUND_ONLY:
            return f'LowerBoundOnly({self.threshold})'
        return self.kind.value


class Justification(enum.Enum):
    CASE_1A = 'Case1A'
    CASE_1B = 'Case1B'
    CASE_1C = 'Case1C'
    CASE_1D = 'Case1D'
    CASE_2 = 'Case2'
    CASE_3_MAX = 'Case3Max'
    CASE_3_MIN = 'Case3Min'


_RATIONALE = {
    Justification.CASE_1A: 'each holder tuple carries a single atomic FK value, so it joins at most one '
                           'relationship instance',
    Justification.CASE_1B: 'the FK column may be null for some holder tuples, so total participation is not enforced',
    Justification.CASE_1C: 'an FK value may repeat across holder tuples, so the referenced side may join many '
                           'relationship instances',
    Justification.CASE_1D: 'referenced tuples may or may not appear as FK values, so their min is not pinned',
    Justification.CASE_2: 'the one-to-many RDS is the one-to-one RDS, so the many-side max is indistinguishable '
                          'from 1',
    Justification.CASE_3_MAX: 'a junction relation exists only when both maxes exceed one, but the exact max is '
                              'not kept',
    Justification.CASE_3_MIN: 'the junction relation is the same for every min value',
}


def explain(justification: Justification) -> str:
    """One-line rationale behind a justification tag."""
    return _RATIONALE[justification]


@dataclass(frozen=True)
class SlotVerdict:
    """The analyzer's verdict on one constraint slot.

    Only ``Exact(1)`` and ``LowerBoundOnly(1)`` can be expressed by a PK/FK
    schema, so any other exact value or threshold is rejected.
    """
    slot: Slot
    verdict: Verdict
    justification: Justification
    source_value: Optional[Cardinality] = None

    def __post_init__(self):
        if self.verdict.kind is VerdictKind.EXACT and self.verdict.value != ONE:
            raise ValueError(f'Exact verdicts carry the value 1, got {self.verdict.value}')
        if self.verdict.kind is VerdictKind.LOWER_BOUND_ONLY and self.verdict.threshold != 1:
            raise ValueError(f'LowerBoundOnly verdicts carry the threshold 1, got {self.verdict.threshold}')
