"""Brute-force verdicts: inverse-image agreement and instance participation profiles."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from erschema.audit.analysis.verdicts import Verdict, VerdictKind
from erschema.audit.model.er import SLOT_ORDER, ErModel, Slot, constraint_slots
from erschema.audit.model.errors import (SchemaNameCollisionError,
                                         UndefinedProfileError)
from erschema.audit.model.rds import (EncodingKind, RelationalSchema,
                                      RelationshipEncoding)
from erschema.audit.tools import erschema_logger, get_erschema_logger
from erschema.audit.transform.transformer import schema_signature, transform

from .instances import (Instance, ParticipationProfile, enumerate_instances,
                        participation_profile, project_schema)


@dataclass(frozen=True)
class Witness:
    """Evidence behind an oracle verdict.

    ``evidence`` holds the preimage models (inverse-image oracle) or the
    instances (instance oracle) exhibiting the bound or the ambiguity.
    """
    description: str
    evidence: tuple = ()


@dataclass(frozen=True)
class OracleVerdict:
    slot: Slot
    verdict: Verdict
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.verdict.kind is not VerdictKind.EXACT and self.witness is None:
            raise ValueError(f'{self.verdict} verdict on {self.slot.value} needs a witness')


@dataclass(frozen=True)
class InverseImageClass:
    """Family members sharing one RDS, and the verdicts that RDS supports."""
    schema: RelationalSchema
    members: Tuple[ErModel, ...]
    verdicts: Tuple[OracleVerdict, ...]

    def verdict(self, slot: Slot) -> OracleVerdict:
        return next(v for v in self.verdicts if v.slot is slot)


def _single_relationship(model: ErModel):
    if len(model.relationships) != 1:
        raise ValueError('Family members must hold exactly one relationship type')
    return model.relationships[0]


def _slot_value(model: ErModel, slot: Slot):
    return next(cs.value for cs in constraint_slots(_single_relationship(model)) if cs.slot is slot)


def _class_verdict(members: Tuple[ErModel, ...], slot: Slot) -> OracleVerdict:
    values = [_slot_value(member, slot) for member in members]
    first = values[0]
    if all(value == first for value in values):
        return OracleVerdict(slot, Verdict.exact(first))
    index = next(i for i, value in enumerate(values) if value != first)
    pair = (members[0], members[index])
    if all(value.exceeds_one() for value in values):
        description = f'preimages disagree on {slot.value} ({first} vs {values[index]}) but all exceed 1'
        return OracleVerdict(slot, Verdict.lower_bound_only(1), Witness(description, pair))
    description = f'preimages disagree on {slot.value}: {first} vs {values[index]}'
    return OracleVerdict(slot, Verdict.not_represented(), Witness(description, pair))


@erschema_logger
def inverse_image_verdicts(family: List[ErModel]) -> Dict[tuple, InverseImageClass]:
    """Group a family by RDS and read each slot back from the preimages.

    Every member is transformed; members whose schemas are schema_equal
    form one class. A member whose transformation collides with one of its
    own attribute names has no RDS and is left out. Within a class a slot
    is ``Exact(v)`` when every preimage has the value v,
    ``LowerBoundOnly(1)`` when the values differ but all exceed one, and
    ``NotRepresented`` otherwise.

    Parameters
    ----------
    family : list of ErModel
        Valid single-relationship models over one shared entity pair.

    Returns
    -------
    dict
        Keyed by ``schema_signature`` of the class schema, in order of first
        appearance.

    Raises
    ------
    ValueError: When members do not share an entity pair
    InvalidModelError: When a member breaks an ER invariant

    """
    pairs = {tuple(e.name for e in model.entities) for model in family}
    if len(pairs) > 1:
        raise ValueError('Family members must share the same entity pair')

    log = get_erschema_logger()
    grouped: Dict[tuple, List] = {}
    skipped = 0
    for model in family:
        try:
            schema = transform(model)
        except SchemaNameCollisionError as err:
            rel = model.relationships[0]
            log.info('Left %s %s %s out of the family: %s',
                     rel.name, rel.left_constraint, rel.right_constraint, err)
            skipped += 1
            continue
        grouped.setdefault(schema_signature(schema), [schema, []])[1].append(model)

    classes = {}
    for signature, (schema, members) in grouped.items():
        members = tuple(members)
        verdicts = tuple(_class_verdict(members, slot) for slot in SLOT_ORDER)
        classes[signature] = InverseImageClass(schema, members, verdicts)
    log.info('Partitioned %d model(s) into %d RDS class(es), %d without RDS',
             len(family) - skipped, len(classes), skipped)
    return classes


def class_of(classes: Dict[tuple, InverseImageClass], model: ErModel) -> InverseImageClass:
    """The class whose RDS is the transform of ``model``."""
    signature = schema_signature(transform(model))
    if signature not in classes:
        raise ValueError('Model does not belong to any class of the family')
    return classes[signature]


def _first(profiles: List[Tuple[Instance, ParticipationProfile]],
           predicate: Callable[[ParticipationProfile], bool]) -> Optional[Instance]:
    return next((instance for instance, profile in profiles if predicate(profile)), None)


def _max_verdict(slot: Slot, encoding: RelationshipEncoding,
                 profiles: List[Tuple[Instance, ParticipationProfile]]) -> OracleVerdict:
    side = slot.side
    reaches_one = _first(profiles, lambda p: p.achieved_max(side) == 1)
    reaches_many = _first(profiles, lambda p: p.achieved_max(side) >= 2)
    if reaches_many is None:
        if reaches_one is None:
            return OracleVerdict(slot, Verdict.not_represented(),
                                 Witness(f'no instance links a {side.value.lower()} tuple'))
        return OracleVerdict(slot, Verdict.exact(1),
                             Witness(f'every {side.value.lower()} tuple joins at most one pair', (reaches_one,)))
    if encoding.kind is EncodingKind.JUNCTION_RELATION:
        return OracleVerdict(slot, Verdict.lower_bound_only(1),
                             Witness(f'a {side.value.lower()} tuple joins two or more pairs', (reaches_many,)))
    evidence = tuple(i for i in (reaches_one, reaches_many) if i is not None)
    return OracleVerdict(slot, Verdict.not_represented(),
                         Witness(f'{side.value.lower()} participation of 1 and of 2 or more are both legal',
                                 evidence))


def _min_verdict(slot: Slot, profiles: List[Tuple[Instance, ParticipationProfile]]) -> OracleVerdict:
    side = slot.side
    zero = _first(profiles, lambda p: p.achieved_min(side) == 0)
    positive = _first(profiles, lambda p: p.achieved_min(side) >= 1)
    if zero is not None and positive is not None:
        return OracleVerdict(slot, Verdict.not_represented(),
                             Witness(f'{side.value.lower()} min of 0 and of 1 or more are both legal',
                                     (zero, positive)))
    if positive is not None:
        return OracleVerdict(slot, Verdict.exact(1),
                             Witness(f'every {side.value.lower()} tuple participates', (positive,)))
    evidence = (zero,) if zero is not None else ()
    return OracleVerdict(slot, Verdict.not_represented(),
                         Witness(f'no instance forces {side.value.lower()} participation', evidence))


def populated_profiles(instances: List[Instance], encoding: RelationshipEncoding):
    """Pairs (instance, profile), skipping instances with an empty entity table."""
    profiles = []
    for instance in instances:
        try:
            profiles.append((instance, participation_profile(instance, encoding)))
        except UndefinedProfileError:
            continue
    return profiles


@erschema_logger
def instance_verdicts(schema: RelationalSchema, encoding: RelationshipEncoding,
                      key_pool_size: int, cap: Optional[int] = None) -> List[OracleVerdict]:
    """Read each slot of one relationship off the legal instances of its schema.

    The schema is first projected to the relationship's own relations, then
    every legal instance within the key pool is enumerated. Over instances
    whose entity tables are populated:

    - a max slot is ``Exact(1)`` when that side never exceeds one and
      reaches one somewhere; when some instance reaches two or more it is
      ``LowerBoundOnly(1)`` under a junction and ``NotRepresented`` under an
      FK, since an FK schema also admits a participation of exactly one;
    - a min slot is ``NotRepresented`` when both 0 and a positive min occur,
      ``Exact(1)`` when only positive mins occur.

    With a pool of 1 no tuple can repeat, so the many-side maxes degrade to
    ``Exact(1)``.

    Raises
    ------
    ValueError: When key_pool_size is below 1
    EnumerationCapExceededError: When the pool cap is exceeded

    Examples
    --------
        >>> [str(v.verdict) for v in instance_verdicts(schema, schema.encoding('R'), 2)]
        ['NotRepresented', 'Exact(1)', 'NotRepresented', 'NotRepresented']

    """
    projected = project_schema(schema, encoding)
    profiles = populated_profiles(enumerate_instances(projected, key_pool_size, cap), encoding)
    get_erschema_logger().info('%d populated instance(s) for %s', len(profiles), encoding.relationship_name)
    verdicts = []
    for slot in SLOT_ORDER:
        if slot.bound == 'max':
            verdicts.append(_max_verdict(slot, encoding, profiles))
        else:
            verdicts.append(_min_verdict(slot, profiles))
    return verdicts
