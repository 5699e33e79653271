"""Relational database schema types built only from primary and foreign keys."""
import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from erschema.audit import const

from .er import ValidationResult, Violation


class ColumnRole(enum.Enum):
    KEY = 'Key'
    PLAIN = 'Plain'
    FOREIGN_KEY = 'ForeignKey'


class EncodingKind(enum.Enum):
    FK_IN_RELATION = 'FkInRelation'
    JUNCTION_RELATION = 'JunctionRelation'


@dataclass(frozen=True)
class Column:
    name: str
    role: ColumnRole


@dataclass(frozen=True)
class ForeignKey:
    column: str
    target_relation: str
    target_column: str
    nullable: bool = True


@dataclass(frozen=True)
class RelationSchema:
    """A relation schema: ordered columns, a primary key and foreign keys.

    Parameters
    ----------
    name : str
        Relation name; entity relations take the entity type's name.
    columns : tuple of Column
        Columns in declaration order.
    primary_key : tuple of str
        Names of the PK columns, in column order.
    foreign_keys : tuple of ForeignKey
        One entry per ForeignKey-role column.

    """
    name: str
    columns: Tuple[Column, ...] = ()
    primary_key: Tuple[str, ...] = ()
    foreign_keys: Tuple[ForeignKey, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'columns', tuple(self.columns))
        object.__setattr__(self, 'primary_key', tuple(self.primary_key))
        object.__setattr__(self, 'foreign_keys', tuple(self.foreign_keys))

    @property
    def column_names(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.columns)

    def has_column(self, name: str) -> bool:
        return name in self.column_names

    def foreign_key(self, column: str) -> Optional[ForeignKey]:
        for fk in self.foreign_keys:
            if fk.column == column:
                return fk
        return None


@dataclass(frozen=True)
class RelationshipEncoding:
    """How one relationship type was encoded in the schema.

    ``relationship_name``, ``kind`` and ``relation_name`` identify the
    encoding. ``left_relation``, ``right_relation`` and ``columns`` (the FK
    column, or the two junction columns left then right) locate it for the
    oracles and take no part in schema equality.
    """
    relationship_name: str
    kind: EncodingKind
    relation_name: str
    left_relation: str = ''
    right_relation: str = ''
    columns: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'columns', tuple(self.columns))

    @property
    def identity(self) -> Tuple[str, str, str]:
        return (self.relationship_name, self.kind.value, self.relation_name)

    def __str__(self):
        return f'{self.kind.value}({self.relation_name})'


@dataclass(frozen=True)
class RelationalSchema:
    relations: Tuple[RelationSchema, ...] = ()
    relationship_encodings: Tuple[RelationshipEncoding, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'relations', tuple(self.relations))
        object.__setattr__(self, 'relationship_encodings', tuple(self.relationship_encodings))

    def relation(self, name: str) -> RelationSchema:
        for relation in self.relations:
            if relation.name == name:
                return relation
        raise ValueError(f'Unknown relation schema {name}')

    def has_relation(self, name: str) -> bool:
        return any(r.name == name for r in self.relations)

    def encoding(self, relationship_name: str) -> RelationshipEncoding:
        for encoding in self.relationship_encodings:
            if encoding.relationship_name == relationship_name:
                return encoding
        raise ValueError(f'No encoding recorded for relationship {relationship_name}')


def validate_schema(schema: RelationalSchema, relationship_names=None) -> ValidationResult:
    """Check the relation schema and relational schema invariants.

    Parameters
    ----------
    schema : RelationalSchema
        Schema to check.
    relationship_names : iterable of str, optional
        Source relationship names; when given, each must have exactly one
        encoding entry.

    """
    violations = []
    for relation in schema.relations:
        for pk_column in relation.primary_key:
            if not relation.has_column(pk_column):
                violations.append(Violation(const.PK_MISSING_COLUMN, relation.name,
                                            f'PK column {pk_column} missing from {relation.name}'))
                continue
            fk = relation.foreign_key(pk_column)
            if fk is not None and fk.nullable:
                violations.append(Violation(const.PK_NULLABLE, f'{relation.name}.{pk_column}',
                                            f'PK column {pk_column} of {relation.name} is nullable'))

        for column in relation.columns:
            if column.role is not ColumnRole.FOREIGN_KEY:
                continue
            entries = [fk for fk in relation.foreign_keys if fk.column == column.name]
            if len(entries) != 1:
                violations.append(Violation(const.FK_UNLISTED_COLUMN, f'{relation.name}.{column.name}',
                                            f'FK column {column.name} of {relation.name} has {len(entries)} entries'))

        for fk in relation.foreign_keys:
            if not _resolves_to_key(schema, fk):
                violations.append(Violation(const.FK_UNRESOLVED_TARGET, f'{relation.name}.{fk.column}',
                                            f'FK {fk.column} of {relation.name} does not reference '
                                            f'a key column {fk.target_relation}.{fk.target_column}'))

    if relationship_names is not None:
        for name in relationship_names:
            count = sum(1 for e in schema.relationship_encodings if e.relationship_name == name)
            if count == 0:
                violations.append(Violation(const.ENCODING_MISSING, name, f'no encoding for {name}'))
            elif count > 1:
                violations.append(Violation(const.ENCODING_DUPLICATE, name, f'{count} encodings for {name}'))

    return ValidationResult(tuple(violations))


def _resolves_to_key(schema: RelationalSchema, fk: ForeignKey) -> bool:
    if not schema.has_relation(fk.target_relation):
        return False
    target = schema.relation(fk.target_relation)
    return any(c.name == fk.target_column and c.role is ColumnRole.KEY for c in target.columns)
