import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from erschema.audit import const
from erschema.audit.model import (UNBOUNDED, Cardinality, EntityType, ErModel,
                                  ErParseError, RelationshipType,
                                  StructuralConstraint)
from erschema.audit.text import SourceSpan, parse_er, render_er, render_rds
from erschema.audit.transform import transform

FIXTURES = Path(__file__).parent / 'fixtures'

E = EntityType('E', 'Ke', ('A1', 'A2'))
S = EntityType('S', 'Ks', ('A1', 'A2'))
ONE_TO_ONE_LEFT_TOTAL = ErModel((E, S), (RelationshipType('R', 'E', 'S', StructuralConstraint.of(1, 1),
                                                          StructuralConstraint.of(0, 1)),))


def read_fixture(name):
    return (FIXTURES / name).read_text(encoding='utf-8')


def diagnostics_of(text):
    with pytest.raises(ErParseError) as err:
        parse_er(text)
    return err.value.diagnostics


def test_parse_one_to_one_fixture():
    assert parse_er(read_fixture('one_to_one_left_total.er')) == ONE_TO_ONE_LEFT_TOTAL


def test_parse_empty_input():
    assert parse_er('') == ErModel()
    assert parse_er('# nothing declared\n\n') == ErModel()


def test_whitespace_between_tokens_is_free():
    text = 'entity E {key Ke;attr A1;attr A2;} entity S\n{ key Ks; attr A1; attr A2; }\n' \
           'relationship R between E(min 1,max 1)\n and S (min 0, max 1) ;'
    assert parse_er(text) == ONE_TO_ONE_LEFT_TOTAL


def test_key_may_follow_attributes():
    model = parse_er('entity E { attr A1; key Ke; attr A2; }\n')
    assert model.entities[0] == EntityType('E', 'Ke', ('A1', 'A2'))
    assert render_er(model) == 'entity E { key Ke; attr A1; attr A2; }\n'


def test_unbounded_max_is_printed_as_n():
    model = parse_er(read_fixture('one_to_many.er'))
    assert model.relationships[0].right_constraint.max == UNBOUNDED
    assert 'S (min 0, max N)' in render_er(model)


def test_render_empty_model():
    assert render_er(ErModel()) == ''


def test_max_below_one_diagnostic():
    diagnostics = diagnostics_of(read_fixture('invalid/max_below_one.er'))
    assert [d.code for d in diagnostics] == [const.MAX_BELOW_ONE]
    assert 'max below one' in diagnostics[0].message
    assert diagnostics[0].span == SourceSpan(3, 26, 14)


def test_zero_max_with_positive_min_reports_both_codes():
    text = read_fixture('invalid/max_below_one.er').replace('(min 0, max 0)', '(min 1, max 0)')
    diagnostics = diagnostics_of(text)
    assert [d.code for d in diagnostics] == [const.MAX_BELOW_ONE, const.MIN_EXCEEDS_MAX]
    assert [d.span for d in diagnostics] == [SourceSpan(3, 26, 14)] * 2


@pytest.mark.parametrize('fixture, code', [
    ('max_below_one.er', const.MAX_BELOW_ONE),
    ('min_exceeds_max.er', const.MIN_EXCEEDS_MAX),
    ('min_unbounded.er', const.MIN_UNBOUNDED),
    ('unknown_entity.er', const.UNKNOWN_ENTITY),
    ('recursive_relationship.er', const.RECURSIVE_RELATIONSHIP),
    ('duplicate_entity.er', const.DUPLICATE_ENTITY),
    ('key_in_attributes.er', const.KEY_IN_ATTRIBUTES),
    ('name_clash.er', const.NAME_CLASH),
    ('missing_key.er', const.MISSING_KEY),
    ('syntax_error.er', const.SYNTAX_ERROR),
])
def test_invalid_fixtures_give_designated_code(fixture, code):
    diagnostics = diagnostics_of(read_fixture(f'invalid/{fixture}'))
    assert [d.code for d in diagnostics] == [code]


def test_syntax_error_points_at_the_token():
    diagnostic = diagnostics_of(read_fixture('invalid/syntax_error.er'))[0]
    assert diagnostic.span == SourceSpan(2, 19, 1)
    assert "expected ';'" in diagnostic.message


def test_unexpected_character():
    diagnostic = diagnostics_of('entity E { key K-e; }')[0]
    assert diagnostic.code == const.SYNTAX_ERROR
    assert diagnostic.span.column == 17


def test_duplicates_point_at_the_second_declaration():
    diagnostic = diagnostics_of(read_fixture('invalid/duplicate_entity.er'))[0]
    assert diagnostic.span.line == 2
    assert diagnostic.span.column == 8


def test_duplicate_key_is_reported():
    diagnostics = diagnostics_of('entity E { key Ke; key Kf; }\n')
    assert [d.code for d in diagnostics] == [const.DUPLICATE_KEY]


def test_semantic_errors_are_all_reported_in_order():
    text = 'entity E { key Ke; }\nentity S { key Ks; }\n' \
           'relationship R between E (min 1, max 0) and T (min 0, max 1);\n' \
           'relationship Q between S (min 2, max 1) and E (min 0, max 1);\n'
    diagnostics = diagnostics_of(text)
    assert [d.code for d in diagnostics] == [const.UNKNOWN_ENTITY, const.MAX_BELOW_ONE, const.MIN_EXCEEDS_MAX,
                                             const.MIN_EXCEEDS_MAX]
    assert [d.span.line for d in diagnostics] == [3, 3, 3, 4]


def test_every_diagnostic_span_lies_within_the_input():
    for path in sorted((FIXTURES / 'invalid').glob('*.er')):
        text = path.read_text(encoding='utf-8')
        lines = text.split('\n')
        for diagnostic in diagnostics_of(text):
            assert diagnostic.span.line <= len(lines)
            assert diagnostic.span.column <= len(lines[diagnostic.span.line - 1]) + 1


def test_render_rds_golden_files():
    for name in ('one_to_one_left_total', 'one_to_one_right_total', 'one_to_many', 'many_to_many',
                 'two_junctions', 'mixed_encodings'):
        schema = transform(parse_er(read_fixture(f'{name}.er')))
        assert render_rds(schema) == read_fixture(f'{name}.rds')


def test_render_rds_empty_schema():
    assert render_rds(transform(ErModel())) == ''


def test_structured_rds_carries_every_field():
    schema = transform(ONE_TO_ONE_LEFT_TOTAL)
    data = json.loads(render_rds(schema, const.STRUCTURED_FORMAT))
    assert list(data) == ['relations', 'relationship_encodings']
    relation = data['relations'][0]
    assert list(relation) == ['name', 'columns', 'primary_key', 'foreign_keys']
    assert relation['foreign_keys'] == [{'column': 'S_Ks', 'target_relation': 'S', 'target_column': 'Ks',
                                         'nullable': True}]
    assert data['relationship_encodings'] == [{'relationship': 'R', 'encoding': 'FkInRelation', 'relation': 'E'}]


def test_render_rds_rejects_unknown_format():
    with pytest.raises(ValueError):
        render_rds(transform(ONE_TO_ONE_LEFT_TOTAL), 'xml')


# Generated corpus for the round trip
max_values = st.one_of(st.integers(min_value=1, max_value=5).map(Cardinality.finite), st.just(UNBOUNDED))


@st.composite
def constraints(draw):
    maximum = draw(max_values)
    upper = 5 if maximum.is_unbounded else maximum.bound
    return StructuralConstraint(Cardinality.finite(draw(st.integers(min_value=0, max_value=upper))), maximum)


@st.composite
def models(draw):
    entity_count = draw(st.integers(min_value=2, max_value=4))
    entities = []
    for i in range(entity_count):
        attributes = tuple(f'A{j}' for j in range(draw(st.integers(min_value=0, max_value=3))))
        entities.append(EntityType(f'E{i}', f'K{i}', attributes))
    pairs = [(a, b) for a in range(entity_count) for b in range(entity_count) if a != b]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=4))
    relationships = tuple(RelationshipType(f'R{i}', f'E{a}', f'E{b}', draw(constraints()), draw(constraints()))
                          for i, (a, b) in enumerate(chosen))
    return ErModel(tuple(entities), relationships)


@settings(max_examples=150, deadline=None)
@given(models())
def test_parse_render_round_trip(model):
    assert parse_er(render_er(model)) == model


@settings(max_examples=50, deadline=None)
@given(models())
def test_render_is_deterministic(model):
    assert render_er(model) == render_er(parse_er(render_er(model)))
