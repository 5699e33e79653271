"""Classical ER-to-relational transformation using only primary and foreign keys."""
import enum
import itertools
from dataclasses import dataclass
from typing import List

from erschema.audit.model.er import (ONE, ErModel, RelationshipKind,
                                     RelationshipType, Side,
                                     classify_relationship, validate_model)
from erschema.audit.model.errors import (InvalidModelError,
                                         SchemaNameCollisionError)
from erschema.audit.model.rds import (Column, ColumnRole, EncodingKind,
                                      ForeignKey, RelationalSchema,
                                      RelationSchema, RelationshipEncoding)
from erschema.audit.tools import erschema_logger


class PlacementReason(enum.Enum):
    TOTAL_PARTICIPATION = 'TotalParticipation'
    TIE_BREAK = 'TieBreak'
    MAX_ONE_SIDE = 'MaxOneSide'


@dataclass(frozen=True)
class FkPlacement:
    """Which relation receives the FK encoding a 1:1 or 1:N relationship."""
    holder: str
    referenced: str
    reason: PlacementReason
    holder_side: Side

    def __post_init__(self):
        if self.holder == self.referenced:
            raise ValueError('FK holder and referenced relation must differ')


def fk_column_name(entity_name: str, key_attribute: str) -> str:
    """Name of a column borrowing ``entity_name``'s key, e.g. ``S_Ks``."""
    return f'{entity_name}_{key_attribute}'


def _require_valid(model: ErModel):
    result = validate_model(model)
    if not result.ok:
        raise InvalidModelError(result.violations)


def _require_kind(rel: RelationshipType, kind: RelationshipKind):
    actual = classify_relationship(rel).kind
    if actual is not kind:
        raise ValueError(f'Relationship {rel.name} is {actual.value}, expected {kind.value}')


def _placement(rel: RelationshipType, holder_side: Side, reason: PlacementReason) -> FkPlacement:
    return FkPlacement(holder=rel.entity(holder_side), referenced=rel.entity(holder_side.other),
                       reason=reason, holder_side=holder_side)


@erschema_logger
def transform_entities(model: ErModel) -> RelationalSchema:
    """Map every entity type to a relation schema keyed by its key attribute.

    Relationship types are left untransformed.
    """
    _require_valid(model)
    relations = []
    for entity in model.entities:
        columns = [Column(entity.key_attribute, ColumnRole.KEY)]
        columns.extend(Column(attribute, ColumnRole.PLAIN) for attribute in entity.attributes)
        relations.append(RelationSchema(entity.name, tuple(columns), (entity.key_attribute,)))
    return RelationalSchema(tuple(relations))


def place_fk_one_to_one(rel: RelationshipType) -> FkPlacement:
    """Choose the FK holder of a one-to-one relationship type.

    The side with total participation holds the FK. When both sides or
    neither side has min 1, the entity whose name sorts first holds it.
    """
    _require_kind(rel, RelationshipKind.ONE_TO_ONE)
    left_total = rel.left_constraint.min == ONE
    right_total = rel.right_constraint.min == ONE
    if left_total != right_total:
        side = Side.LEFT if left_total else Side.RIGHT
        return _placement(rel, side, PlacementReason.TOTAL_PARTICIPATION)
    side = Side.LEFT if rel.left_entity < rel.right_entity else Side.RIGHT
    return _placement(rel, side, PlacementReason.TIE_BREAK)


def place_fk_one_to_many(rel: RelationshipType) -> FkPlacement:
    """The side whose max is 1 holds the FK, whatever the min values."""
    classification = classify_relationship(rel)
    if classification.kind is not RelationshipKind.ONE_TO_MANY:
        raise ValueError(f'Relationship {rel.name} is {classification.kind.value}, expected OneToMany')
    return _placement(rel, classification.one_side, PlacementReason.MAX_ONE_SIDE)


def place_fk(rel: RelationshipType) -> FkPlacement:
    if classify_relationship(rel).kind is RelationshipKind.ONE_TO_ONE:
        return place_fk_one_to_one(rel)
    return place_fk_one_to_many(rel)


def transform_many_to_many(rel: RelationshipType, model: ErModel) -> RelationSchema:
    """Build the junction relation for a many-to-many relationship type.

    The junction is named after the relationship and holds one non-nullable
    FK per entity, named ``<Entity>_<Key>``; together they form the PK.
    ``model`` supplies the key attributes of the two entity types.
    """
    _require_kind(rel, RelationshipKind.MANY_TO_MANY)
    left = model.entity(rel.left_entity)
    right = model.entity(rel.right_entity)
    left_column = fk_column_name(left.name, left.key_attribute)
    right_column = fk_column_name(right.name, right.key_attribute)
    return RelationSchema(
        name=rel.name,
        columns=(Column(left_column, ColumnRole.FOREIGN_KEY), Column(right_column, ColumnRole.FOREIGN_KEY)),
        primary_key=(left_column, right_column),
        foreign_keys=(ForeignKey(left_column, left.name, left.key_attribute, nullable=False),
                      ForeignKey(right_column, right.name, right.key_attribute, nullable=False)),
    )


@erschema_logger
def transform(model: ErModel) -> RelationalSchema:
    """Transform a model into a relational schema.

    Entity types become relations; relationship types are then encoded in
    declaration order: 1:1 and 1:N by a nullable FK column in the holder
    relation, M:N by a junction relation.

    Raises
    ------
    InvalidModelError: When the model breaks an ER invariant
    SchemaNameCollisionError: When a generated column or relation name is taken

    Examples
    --------
        >>> schema = transform(parse_er(one_to_one_text))
        >>> [str(e) for e in schema.relationship_encodings]
        ['FkInRelation(E)']

    """
    relations: List[RelationSchema] = list(transform_entities(model).relations)
    encodings = []
    for rel in model.relationships:
        if classify_relationship(rel).kind is RelationshipKind.MANY_TO_MANY:
            junction = transform_many_to_many(rel, model)
            if any(r.name == junction.name for r in relations):
                raise SchemaNameCollisionError(f'Relation {junction.name} already exists')
            relations.append(junction)
            encodings.append(RelationshipEncoding(rel.name, EncodingKind.JUNCTION_RELATION, junction.name,
                                                  rel.left_entity, rel.right_entity, junction.primary_key))
            continue

        placement = place_fk(rel)
        referenced = model.entity(placement.referenced)
        column = fk_column_name(referenced.name, referenced.key_attribute)
        index = next(i for i, r in enumerate(relations) if r.name == placement.holder)
        holder = relations[index]
        if holder.has_column(column):
            raise SchemaNameCollisionError(f'Column {column} already exists in relation {holder.name}')
        relations[index] = RelationSchema(
            name=holder.name,
            columns=holder.columns + (Column(column, ColumnRole.FOREIGN_KEY),),
            primary_key=holder.primary_key,
            foreign_keys=holder.foreign_keys + (ForeignKey(column, referenced.name,
                                                           referenced.key_attribute, nullable=True),),
        )
        encodings.append(RelationshipEncoding(rel.name, EncodingKind.FK_IN_RELATION, holder.name,
                                              rel.left_entity, rel.right_entity, (column,)))

    return RelationalSchema(tuple(relations), tuple(encodings))


def _relation_signature(relation: RelationSchema) -> tuple:
    return (
        relation.name,
        tuple((c.name, c.role.value) for c in relation.columns),
        frozenset(relation.primary_key),
        frozenset((fk.column, fk.target_relation, fk.target_column, fk.nullable)
                  for fk in relation.foreign_keys),
    )


def schema_signature(schema: RelationalSchema) -> tuple:
    """Hashable canonical form; equal signatures mean schema_equal schemas."""
    return (
        frozenset(_relation_signature(r) for r in schema.relations),
        frozenset(e.identity for e in schema.relationship_encodings),
    )


def schema_equal(a: RelationalSchema, b: RelationalSchema) -> bool:
    """Structural equality of two schemas.

    Relations match by name; per relation the columns (name, role, order),
    primary key and foreign keys (column, target, nullability) must agree.
    Encodings compare by relationship name, kind and relation name.
    """
    return schema_signature(a) == schema_signature(b)


def _shape(relation: RelationSchema):
    return tuple(c.role for c in relation.columns), len(relation.foreign_keys)


def _target_position(schema: RelationalSchema, fk: ForeignKey) -> int:
    # column names are free under renaming, so FK targets compare by position
    return schema.relation(fk.target_relation).column_names.index(fk.target_column)


def _maps_relation(a: RelationSchema, b: RelationSchema, mapping: dict,
                   schema_a: RelationalSchema, schema_b: RelationalSchema) -> bool:
    if len(a.columns) != len(b.columns):
        return False
    for column_a, column_b in zip(a.columns, b.columns):
        if column_a.role is not column_b.role:
            return False
        if (column_a.name in a.primary_key) != (column_b.name in b.primary_key):
            return False
        fk_a = a.foreign_key(column_a.name)
        fk_b = b.foreign_key(column_b.name)
        if (fk_a is None) != (fk_b is None):
            return False
        if fk_a is None:
            continue
        if mapping.get(fk_a.target_relation) != fk_b.target_relation or fk_a.nullable != fk_b.nullable:
            return False
        if _target_position(schema_a, fk_a) != _target_position(schema_b, fk_b):
            return False
    return True


def schema_isomorphic(a: RelationalSchema, b: RelationalSchema) -> bool:
    """Structural identity up to renaming of relations and columns.

    True when some bijection between the relations of ``a`` and ``b`` maps,
    per relation, the column role sequence, PK positions, FK positions and
    targets, and nullability, and maps encodings kind for kind. The RDS of a
    one-to-one relationship with total participation on the left is
    isomorphic to its mirror image with total participation on the right.
    """
    if len(a.relations) != len(b.relations) or \
            len(a.relationship_encodings) != len(b.relationship_encodings):
        return False
    for candidate in itertools.permutations(b.relations):
        if any(_shape(ra) != _shape(rb) for ra, rb in zip(a.relations, candidate)):
            continue
        mapping = {ra.name: rb.name for ra, rb in zip(a.relations, candidate)}
        if not all(_maps_relation(ra, rb, mapping, a, b) for ra, rb in zip(a.relations, candidate)):
            continue
        encodings_a = sorted((e.kind.value, mapping[e.relation_name]) for e in a.relationship_encodings)
        encodings_b = sorted((e.kind.value, e.relation_name) for e in b.relationship_encodings)
        if encodings_a == encodings_b:
            return True
    return False
