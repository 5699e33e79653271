"""ER model types: entity types, structural constraints and binary relationship types."""
import enum
import functools
import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from erschema.audit import const

IDENTIFIER_PATTERN = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')


class Side(enum.Enum):
    """Side of a binary relationship type."""
    LEFT = 'Left'
    RIGHT = 'Right'

    @property
    def other(self) -> 'Side':
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@functools.total_ordering
@dataclass(frozen=True)
class Cardinality:
    """A min or max structural constraint value.

    ``bound`` holds the finite value; ``None`` stands for the unbounded max,
    written ``N``. Every finite value is smaller than ``N``.

    Examples
    --------
        >>> Cardinality.finite(3) < Cardinality.unbounded()
        True
        >>> str(Cardinality.parse('N'))
        'N'

    """
    bound: Optional[int]

    @classmethod
    def finite(cls, k: int) -> 'Cardinality':
        return cls(int(k))

    @classmethod
    def unbounded(cls) -> 'Cardinality':
        return cls(None)

    @classmethod
    def parse(cls, token) -> 'Cardinality':
        """Build a value from an int, a digit string or ``N``."""
        if isinstance(token, Cardinality):
            return token
        if token == const.UNBOUNDED_TOKEN:
            return cls.unbounded()
        if isinstance(token, int) and not isinstance(token, bool):
            return cls.finite(token)
        if isinstance(token, str) and token.isdigit():
            return cls.finite(int(token))
        raise ValueError(f'Unexpected cardinality value: {token!r}')

    @property
    def is_unbounded(self) -> bool:
        return self.bound is None

    def exceeds_one(self) -> bool:
        return self.is_unbounded or self.bound > 1

    def __lt__(self, other):
        if not isinstance(other, Cardinality):
            return NotImplemented
        if self.is_unbounded:
            return False
        if other.is_unbounded:
            return True
        return self.bound < other.bound

    def __str__(self):
        return const.UNBOUNDED_TOKEN if self.is_unbounded else str(self.bound)


UNBOUNDED = Cardinality.unbounded()
ZERO = Cardinality.finite(0)
ONE = Cardinality.finite(1)


@dataclass(frozen=True)
class StructuralConstraint:
    """The (min, max) pair on one side of a relationship type."""
    min: Cardinality
    max: Cardinality

    @classmethod
    def of(cls, min_value, max_value) -> 'StructuralConstraint':
        return cls(Cardinality.parse(min_value), Cardinality.parse(max_value))

    def __str__(self):
        return f'({self.min},{self.max})'


@dataclass(frozen=True)
class EntityType:
    """A regular entity type with a single key attribute."""
    name: str
    key_attribute: str
    attributes: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'attributes', tuple(self.attributes))


@dataclass(frozen=True)
class RelationshipType:
    """A binary, non-recursive relationship type."""
    name: str
    left_entity: str
    right_entity: str
    left_constraint: StructuralConstraint
    right_constraint: StructuralConstraint

    def entity(self, side: Side) -> str:
        return self.left_entity if side is Side.LEFT else self.right_entity

    def constraint(self, side: Side) -> StructuralConstraint:
        return self.left_constraint if side is Side.LEFT else self.right_constraint


@dataclass(frozen=True)
class ErModel:
    """Entity types plus the binary relationship types between them."""
    entities: Tuple[EntityType, ...] = ()
    relationships: Tuple[RelationshipType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'entities', tuple(self.entities))
        object.__setattr__(self, 'relationships', tuple(self.relationships))

    def entity(self, name: str) -> EntityType:
        for entity in self.entities:
            if entity.name == name:
                return entity
        raise ValueError(f'Unknown entity type {name}')

    def relationship(self, name: str) -> RelationshipType:
        for relationship in self.relationships:
            if relationship.name == name:
                return relationship
        raise ValueError(f'Unknown relationship type {name}')

    def submodel(self, relationship_name: str) -> 'ErModel':
        """Model holding one relationship type and its two entity types."""
        rel = self.relationship(relationship_name)
        return ErModel(entities=(self.entity(rel.left_entity), self.entity(rel.right_entity)),
                       relationships=(rel,))


@dataclass(frozen=True)
class Violation:
    """One broken invariant: a stable code, the offending element and a message."""
    code: str
    element: str
    message: str

    def __str__(self):
        return f'{self.code}: {self.message}'


@dataclass(frozen=True)
class ValidationResult:
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def codes(self) -> List[str]:
        return [v.code for v in self.violations]

    def __bool__(self):
        return self.ok


class RelationshipKind(enum.Enum):
    ONE_TO_ONE = 'OneToOne'
    ONE_TO_MANY = 'OneToMany'
    MANY_TO_MANY = 'ManyToMany'


@dataclass(frozen=True)
class Classification:
    """Relationship class; ``one_side`` is set only for one-to-many."""
    kind: RelationshipKind
    one_side: Optional[Side] = None

    def __str__(self):
        if self.kind is RelationshipKind.ONE_TO_MANY:
            return f'{self.kind.value}({self.one_side.value})'
        return self.kind.value


class Slot(enum.Enum):
    """The four structural constraint positions of a binary relationship type."""
    LEFT_MIN = 'LeftMin'
    LEFT_MAX = 'LeftMax'
    RIGHT_MIN = 'RightMin'
    RIGHT_MAX = 'RightMax'

    @property
    def side(self) -> Side:
        return Side.LEFT if self in (Slot.LEFT_MIN, Slot.LEFT_MAX) else Side.RIGHT

    @property
    def bound(self) -> str:
        return 'min' if self in (Slot.LEFT_MIN, Slot.RIGHT_MIN) else 'max'

    @classmethod
    def of(cls, side: Side, bound: str) -> 'Slot':
        return cls(f'{side.value}{bound.capitalize()}')


SLOT_ORDER = (Slot.LEFT_MIN, Slot.LEFT_MAX, Slot.RIGHT_MIN, Slot.RIGHT_MAX)


@dataclass(frozen=True)
class ConstraintSlot:
    slot: Slot
    value: Cardinality

    def __str__(self):
        return f'{self.slot.value}={self.value}'


def _is_identifier(name) -> bool:
    return isinstance(name, str) and bool(IDENTIFIER_PATTERN.match(name))


def _constraint_violations(rel: RelationshipType, side: Side) -> List[Violation]:
    constraint = rel.constraint(side)
    element = f'{rel.name}.{side.value.lower()}'
    where = f'on {side.value.lower()} side of {rel.name}'
    violations = []
    if constraint.min.is_unbounded:
        violations.append(Violation(const.MIN_UNBOUNDED, element, f'min cannot be N {where}'))
    elif constraint.min.bound < 0:
        violations.append(Violation(const.MIN_NEGATIVE, element, f'min below zero {where}'))
    if not constraint.max.is_unbounded and constraint.max.bound < 1:
        violations.append(Violation(const.MAX_BELOW_ONE, element, f'max below one {where}'))
    if not constraint.min.is_unbounded and constraint.max < constraint.min:
        violations.append(Violation(const.MIN_EXCEEDS_MAX, element, f'min exceeds max {where}'))
    return violations


def validate_model(model: ErModel) -> ValidationResult:
    """Check every ER model invariant.

    Parameters
    ----------
    model : ErModel
        Model to check.

    Returns
    -------
    ValidationResult
        ``ok`` when nothing is wrong; otherwise every violation found, each
        with its stable code and the offending element name.

    Examples
    --------
        >>> result = validate_model(model)
        >>> result.ok, result.codes
        (False, ['max-below-one'])

    """
    violations = []
    entity_names = set()
    for entity in model.entities:
        if not _is_identifier(entity.name):
            violations.append(Violation(const.INVALID_IDENTIFIER, str(entity.name),
                                        f'entity name {entity.name!r} is not an identifier'))
        if entity.name in entity_names:
            violations.append(Violation(const.DUPLICATE_ENTITY, entity.name,
                                        f'duplicate entity type {entity.name}'))
        entity_names.add(entity.name)

        if not _is_identifier(entity.key_attribute):
            violations.append(Violation(const.INVALID_IDENTIFIER, f'{entity.name}.{entity.key_attribute}',
                                        f'key {entity.key_attribute!r} of {entity.name} is not an identifier'))
        seen = set()
        for attribute in entity.attributes:
            element = f'{entity.name}.{attribute}'
            if not _is_identifier(attribute):
                violations.append(Violation(const.INVALID_IDENTIFIER, element,
                                            f'attribute {attribute!r} of {entity.name} is not an identifier'))
            if attribute == entity.key_attribute:
                violations.append(Violation(const.KEY_IN_ATTRIBUTES, element,
                                            f'key {attribute} repeated as attribute of {entity.name}'))
            elif attribute in seen:
                violations.append(Violation(const.DUPLICATE_ATTRIBUTE, element,
                                            f'duplicate attribute {attribute} in {entity.name}'))
            seen.add(attribute)

    relationship_names = set()
    for rel in model.relationships:
        if not _is_identifier(rel.name):
            violations.append(Violation(const.INVALID_IDENTIFIER, str(rel.name),
                                        f'relationship name {rel.name!r} is not an identifier'))
        if rel.name in relationship_names:
            violations.append(Violation(const.DUPLICATE_RELATIONSHIP, rel.name,
                                        f'duplicate relationship type {rel.name}'))
        relationship_names.add(rel.name)
        if rel.name in entity_names:
            violations.append(Violation(const.NAME_CLASH, rel.name,
                                        f'relationship {rel.name} has the name of an entity type'))
        for entity_name in (rel.left_entity, rel.right_entity):
            if entity_name not in entity_names:
                violations.append(Violation(const.UNKNOWN_ENTITY, rel.name,
                                            f'relationship {rel.name} refers to unknown entity {entity_name}'))
        if rel.left_entity == rel.right_entity:
            violations.append(Violation(const.RECURSIVE_RELATIONSHIP, rel.name,
                                        f'relationship {rel.name} is recursive'))
        for side in Side:
            violations.extend(_constraint_violations(rel, side))

    return ValidationResult(tuple(violations))


def classify_relationship(rel: RelationshipType) -> Classification:
    """Classify a relationship type by its two max values.

    Examples
    --------
        >>> classify_relationship(rel)  # x1 = 1, x2 = N
        Classification(kind=<RelationshipKind.ONE_TO_MANY: 'OneToMany'>, one_side=<Side.LEFT: 'Left'>)

    """
    left_one = rel.left_constraint.max == ONE
    right_one = rel.right_constraint.max == ONE
    if left_one and right_one:
        return Classification(RelationshipKind.ONE_TO_ONE)
    if left_one:
        return Classification(RelationshipKind.ONE_TO_MANY, Side.LEFT)
    if right_one:
        return Classification(RelationshipKind.ONE_TO_MANY, Side.RIGHT)
    return Classification(RelationshipKind.MANY_TO_MANY)


def constraint_slots(rel: RelationshipType) -> List[ConstraintSlot]:
    """The four constraint values in the order LeftMin, LeftMax, RightMin, RightMax."""
    return [ConstraintSlot(slot, getattr(rel.constraint(slot.side), slot.bound)) for slot in SLOT_ORDER]
