"""Exhaustive enumeration of small legal instances of a relational schema."""
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from erschema.audit import const
from erschema.audit.model.er import Side
from erschema.audit.model.errors import (EnumerationCapExceededError,
                                         UndefinedProfileError)
from erschema.audit.model.rds import (ColumnRole, EncodingKind, RelationalSchema,
                                      RelationSchema, RelationshipEncoding)
from erschema.audit.tools import (erschema_logger, get_erschema_logger,
                                  load_environment_value)


@dataclass(frozen=True)
class Table:
    """Population of one relation, projected to its key and FK columns.

    ``None`` in a row is a null FK value.
    """
    relation: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[Optional[str], ...], ...] = ()

    def column(self, name: str) -> List[Optional[str]]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def __str__(self):
        rendered = ', '.join('(' + ', '.join('null' if v is None else v for v in row) + ')' for row in self.rows)
        return f'{self.relation} → [{rendered}]'


@dataclass(frozen=True)
class Instance:
    tables: Tuple[Table, ...] = ()

    def table(self, relation: str) -> Table:
        for table in self.tables:
            if table.relation == relation:
                return table
        raise ValueError(f'No table for relation {relation}')

    def __str__(self):
        return '\n'.join(str(table) for table in self.tables)


@dataclass(frozen=True)
class ParticipationProfile:
    """Observed min and max participation counts on each side of a relationship."""
    left_min: int
    left_max: int
    right_min: int
    right_max: int

    def achieved_min(self, side: Side) -> int:
        return self.left_min if side is Side.LEFT else self.right_min

    def achieved_max(self, side: Side) -> int:
        return self.left_max if side is Side.LEFT else self.right_max


def pool_cap() -> int:
    """Largest allowed key pool size, overridable through ERSCHEMA_POOL_CAP."""
    value = load_environment_value(const.ENV_POOL_CAP, str(const.DEFAULT_POOL_CAP))
    try:
        return int(value)
    except ValueError:
        raise ValueError(f'{const.ENV_POOL_CAP} must be an integer, got {value!r}') from None


def projected_columns(relation: RelationSchema) -> Tuple[str, ...]:
    """Key and FK columns; plain attributes never affect participation."""
    return tuple(c.name for c in relation.columns if c.role is not ColumnRole.PLAIN)


def key_symbol(relation_name: str, index: int) -> str:
    return f'{relation_name.lower()}{index}'


def project_schema(schema: RelationalSchema, encoding: RelationshipEncoding) -> RelationalSchema:
    """Restrict a schema to the relations and FK of one relationship encoding.

    The result holds the two entity relations, stripped of every FK but the
    encoding's own, and, for a junction encoding, the junction relation.
    """
    kept = []
    for name in (encoding.left_relation, encoding.right_relation):
        relation = schema.relation(name)
        own = tuple(fk for fk in relation.foreign_keys
                    if encoding.kind is EncodingKind.FK_IN_RELATION
                    and relation.name == encoding.relation_name and fk.column in encoding.columns)
        own_columns = {fk.column for fk in own}
        columns = tuple(c for c in relation.columns
                        if c.role is not ColumnRole.FOREIGN_KEY or c.name in own_columns)
        kept.append(RelationSchema(relation.name, columns, relation.primary_key, own))
    if encoding.kind is EncodingKind.JUNCTION_RELATION:
        kept.append(schema.relation(encoding.relation_name))
    return RelationalSchema(tuple(kept), (encoding,))


def _dependency_order(schema: RelationalSchema) -> List[RelationSchema]:
    ordered, placed = [], set()
    pending = list(schema.relations)
    while pending:
        ready = [r for r in pending
                 if all(fk.target_relation in placed or fk.target_relation == r.name for fk in r.foreign_keys)]
        if not ready or any(fk.target_relation == r.name for r in ready for fk in r.foreign_keys):
            raise ValueError('Cyclic foreign keys cannot be enumerated')
        for relation in ready:
            ordered.append(relation)
            placed.add(relation.name)
            pending.remove(relation)
    return ordered


def _powerset(items):
    return itertools.chain.from_iterable(itertools.combinations(items, size) for size in range(len(items) + 1))


def _populations(relation: RelationSchema, partial: Dict[str, Table], pool: int):
    """Every legal table for ``relation`` given the already populated targets."""
    columns = projected_columns(relation)

    def targets(column):
        fk = relation.foreign_key(column)
        table = partial[fk.target_relation]
        return sorted(set(table.column(fk.target_column)))

    key_choices = []
    for column in relation.primary_key:
        if relation.foreign_key(column) is None:
            key_choices.append([key_symbol(relation.name, i) for i in range(1, pool + 1)])
        else:
            key_choices.append(targets(column))
    key_tuples = list(itertools.product(*key_choices))

    other_columns = [c for c in columns if c not in relation.primary_key]
    other_choices = []
    for column in other_columns:
        fk = relation.foreign_key(column)
        values = targets(column)
        other_choices.append(([None] if fk.nullable else []) + values)

    for keys in _powerset(key_tuples):
        row_choices = list(itertools.product(*other_choices))
        for assignment in itertools.product(row_choices, repeat=len(keys)):
            rows = []
            for key, others in zip(keys, assignment):
                values = dict(zip(relation.primary_key, key))
                values.update(zip(other_columns, others))
                rows.append(tuple(values[c] for c in columns))
            yield Table(relation.name, columns, tuple(rows))


@erschema_logger
def enumerate_instances(schema: RelationalSchema, key_pool_size: int, cap: Optional[int] = None) -> List[Instance]:
    """List every legal instance of a small schema.

    Entity keys are drawn from ``key_pool_size`` symbols per relation (``e1``,
    ``e2``, ... for relation ``E``); nullable FKs range over null and the
    target keys present; junction tuples range over pairs of present keys.

    Parameters
    ----------
    schema : RelationalSchema
        Schema with at most three relations and acyclic foreign keys.
    key_pool_size : int
        Number of key symbols per relation, between 1 and the pool cap.
    cap : int, optional
        Pool cap; defaults to ERSCHEMA_POOL_CAP or 3.

    Returns
    -------
    list of Instance
        Deterministic order; the empty instance comes first.

    Raises
    ------
    ValueError: When key_pool_size is below 1 or foreign keys are cyclic
    EnumerationCapExceededError: When the pool or relation cap is exceeded

    Examples
    --------
        >>> len(enumerate_instances(transform(one_to_one_model), 1))
        5

    """
    if isinstance(key_pool_size, bool) or not isinstance(key_pool_size, int) or key_pool_size < 1:
        raise ValueError(f'Key pool size must be a positive integer, got {key_pool_size!r}')
    cap = pool_cap() if cap is None else cap
    if key_pool_size > cap:
        raise EnumerationCapExceededError(f'Key pool size {key_pool_size} exceeds the cap of {cap}')
    if len(schema.relations) > const.RELATION_CAP:
        raise EnumerationCapExceededError(
            f'Schema has {len(schema.relations)} relations, the cap is {const.RELATION_CAP}')

    partials = [{}]
    for relation in _dependency_order(schema):
        partials = [dict(partial, **{relation.name: table})
                    for partial in partials
                    for table in _populations(relation, partial, key_pool_size)]

    instances = [Instance(tuple(partial[r.name] for r in schema.relations)) for partial in partials]
    get_erschema_logger().info('Enumerated %d instance(s) with key pool size %d', len(instances), key_pool_size)
    return instances


def is_legal_instance(schema: RelationalSchema, instance: Instance) -> bool:
    """Check PK uniqueness, referential integrity and null-free primary keys."""
    for relation in schema.relations:
        table = instance.table(relation.name)
        keys = [tuple(row[table.columns.index(c)] for c in relation.primary_key) for row in table.rows]
        if len(set(keys)) != len(keys) or any(v is None for key in keys for v in key):
            return False
        for fk in relation.foreign_keys:
            present = set(instance.table(fk.target_relation).column(fk.target_column))
            for value in table.column(fk.column):
                if value is None and not fk.nullable:
                    return False
                if value is not None and value not in present:
                    return False
    return True


def _entity_keys(schema_table: Table) -> List[str]:
    return [row[0] for row in schema_table.rows]


def relationship_pairs(instance: Instance, encoding: RelationshipEncoding) -> List[Tuple[str, str]]:
    """Relationship instances as (left key, right key) pairs."""
    if encoding.kind is EncodingKind.JUNCTION_RELATION:
        table = instance.table(encoding.relation_name)
        return list(zip(table.column(encoding.columns[0]), table.column(encoding.columns[1])))
    holder = instance.table(encoding.relation_name)
    links = [(row[0], fk) for row, fk in zip(holder.rows, holder.column(encoding.columns[0])) if fk is not None]
    if encoding.relation_name == encoding.left_relation:
        return links
    return [(referenced, holder_key) for holder_key, referenced in links]


def participation_profile(instance: Instance, encoding: RelationshipEncoding) -> ParticipationProfile:
    """Observed participation extremes on both sides of an encoded relationship.

    Raises
    ------
    UndefinedProfileError: When either entity table is empty

    Examples
    --------
    One E tuple whose FK is null, one S tuple
        >>> participation_profile(instance, encoding)
        ParticipationProfile(left_min=0, left_max=0, right_min=0, right_max=0)

    """
    left_keys = _entity_keys(instance.table(encoding.left_relation))
    right_keys = _entity_keys(instance.table(encoding.right_relation))
    if not left_keys or not right_keys:
        raise UndefinedProfileError('Participation is undefined on an empty entity table')
    pairs = relationship_pairs(instance, encoding)
    left_counts = Counter(left for left, _ in pairs)
    right_counts = Counter(right for _, right in pairs)
    left = [left_counts[k] for k in left_keys]
    right = [right_counts[k] for k in right_keys]
    return ParticipationProfile(min(left), max(left), min(right), max(right))
