"""Printers for ER models and relational schemas."""
import json

from erschema.audit import const
from erschema.audit.model.er import (ErModel, RelationshipType,
                                     StructuralConstraint)
from erschema.audit.model.rds import RelationalSchema, RelationSchema
from erschema.audit.tools import validate_field_options


def _render_constraint(constraint: StructuralConstraint) -> str:
    return f'(min {constraint.min}, max {constraint.max})'


def render_relationship(rel: RelationshipType) -> str:
    """One relationship declaration without its trailing semicolon."""
    return (f'relationship {rel.name} between {rel.left_entity} {_render_constraint(rel.left_constraint)} '
            f'and {rel.right_entity} {_render_constraint(rel.right_constraint)}')


def render_er(model: ErModel) -> str:
    """Print a model in the ER notation, one declaration per line.

    Entity types come first, then relationship types, each in declaration
    order. ``parse_er(render_er(model)) == model`` for every valid model.
    """
    lines = []
    for entity in model.entities:
        members = [f'key {entity.key_attribute};'] + [f'attr {a};' for a in entity.attributes]
        lines.append(f'entity {entity.name} {{ {" ".join(members)} }}')
    for rel in model.relationships:
        lines.append(f'{render_relationship(rel)};')
    return ''.join(f'{line}\n' for line in lines)


def _render_relation(relation: RelationSchema) -> str:
    cells = []
    for column in relation.columns:
        cell = column.name
        if column.name in relation.primary_key:
            cell += '*'
        fk = relation.foreign_key(column.name)
        if fk is not None:
            cell += f'→{fk.target_relation}.{fk.target_column}'
            if fk.nullable:
                cell += '?'
        cells.append(cell)
    return f'{relation.name}[{", ".join(cells)}]'


def schema_to_dict(schema: RelationalSchema) -> dict:
    """Key-ordered dictionary carrying every RelationalSchema field."""
    return {
        'relations': [
            {
                'name': relation.name,
                'columns': [{'name': c.name, 'role': c.role.value} for c in relation.columns],
                'primary_key': list(relation.primary_key),
                'foreign_keys': [
                    {
                        'column': fk.column,
                        'target_relation': fk.target_relation,
                        'target_column': fk.target_column,
                        'nullable': fk.nullable,
                    }
                    for fk in relation.foreign_keys
                ],
            }
            for relation in schema.relations
        ],
        'relationship_encodings': [
            {
                'relationship': encoding.relationship_name,
                'encoding': encoding.kind.value,
                'relation': encoding.relation_name,
            }
            for encoding in schema.relationship_encodings
        ],
    }


def dumps(data) -> str:
    """Serialize structured output: UTF-8 text, insertion-ordered keys."""
    return f'{json.dumps(data, ensure_ascii=False, indent=2)}\n'


def render_rds(schema: RelationalSchema, output_format: str = const.PAPER_FORMAT) -> str:
    """Render a relational schema.

    Parameters
    ----------
    schema : RelationalSchema
        Schema to print.
    output_format : str, optional (Default: 'paper')
        ``paper`` prints one relation per line as
        ``Name[col*, col, fk→Target.Key?]`` (``*`` marks PK membership, ``?`` a
        nullable FK). ``structured`` prints JSON.

    Examples
    --------
        >>> print(render_rds(transform(one_to_one_model)), end='')
        E[Ke*, A1, A2, S_Ks→S.Ks?]
        S[Ks*, A1, A2]

    """
    validate_field_options(output_format, const.OUTPUT_FORMATS)
    if output_format == const.STRUCTURED_FORMAT:
        return dumps(schema_to_dict(schema))
    return ''.join(f'{_render_relation(relation)}\n' for relation in schema.relations)
