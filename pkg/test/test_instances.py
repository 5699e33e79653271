import itertools
from pathlib import Path

import pytest

from erschema.audit import const
from erschema.audit.model import (EntityType, EnumerationCapExceededError,
                                  ErModel, RelationshipType, Slot,
                                  StructuralConstraint, UndefinedProfileError)
from erschema.audit.oracle import (Instance, ParticipationProfile, Table,
                                   enumerate_instances, instance_verdicts,
                                   is_legal_instance, participation_profile,
                                   pool_cap, project_schema)
from erschema.audit.oracle.verdicts import populated_profiles
from erschema.audit.text import parse_er
from erschema.audit.transform import transform

FIXTURES = Path(__file__).parent / 'fixtures'


def fixture_schema(name):
    return transform(parse_er((FIXTURES / name).read_text(encoding='utf-8')))


FK_SCHEMA = fixture_schema('one_to_one_left_total.er')
FK_ENCODING = FK_SCHEMA.encoding('R')
JUNCTION_SCHEMA = fixture_schema('many_to_many.er')
JUNCTION_ENCODING = JUNCTION_SCHEMA.encoding('R')


def fk_instance(e_rows, s_keys):
    return Instance((Table('E', ('Ke', 'S_Ks'), tuple(e_rows)),
                     Table('S', ('Ks',), tuple((k,) for k in s_keys))))


def test_pool_one_gives_five_instances():
    instances = enumerate_instances(FK_SCHEMA, 1)
    assert len(instances) == 5
    assert instances[0] == fk_instance([], [])
    assert fk_instance([('e1', 's1')], ['s1']) in instances
    assert fk_instance([('e1', None)], ['s1']) in instances
    assert fk_instance([('e1', 's1')], []) not in instances


def test_empty_instance_is_always_included():
    for schema in (FK_SCHEMA, JUNCTION_SCHEMA):
        instances = enumerate_instances(schema, 1)
        assert all(not table.rows for table in instances[0].tables)


def test_plain_attributes_are_projected_away():
    instance = enumerate_instances(FK_SCHEMA, 1)[-1]
    assert instance.table('E').columns == ('Ke', 'S_Ks')
    assert instance.table('S').columns == ('Ks',)


def test_enumeration_is_deterministic():
    assert enumerate_instances(JUNCTION_SCHEMA, 2) == enumerate_instances(JUNCTION_SCHEMA, 2)


def test_all_enumerated_instances_are_legal():
    for schema in (FK_SCHEMA, JUNCTION_SCHEMA):
        instances = enumerate_instances(schema, 2)
        assert len(set(instances)) == len(instances)
        assert all(is_legal_instance(schema, instance) for instance in instances)


def test_junction_tuples_only_pair_present_keys():
    for instance in enumerate_instances(JUNCTION_SCHEMA, 2):
        e_keys = set(instance.table('E').column('Ke'))
        s_keys = set(instance.table('S').column('Ks'))
        for e_key, s_key in instance.table('R').rows:
            assert e_key in e_keys and s_key in s_keys


def test_enumeration_is_complete_for_fk_schema():
    # every legal population built independently must be enumerated
    instances = set(enumerate_instances(FK_SCHEMA, 2))
    s_populations = [(), ('s1',), ('s2',), ('s1', 's2')]
    expected = 0
    for s_keys in s_populations:
        choices = [None] + list(s_keys)
        for size in range(3):
            for e_keys in itertools.combinations(('e1', 'e2'), size):
                for values in itertools.product(choices, repeat=size):
                    assert fk_instance(zip(e_keys, values), s_keys) in instances
                    expected += 1
    assert len(instances) == expected


def test_is_legal_instance_rejects_broken_instances():
    assert not is_legal_instance(FK_SCHEMA, fk_instance([('e1', 's2')], ['s1']))
    assert not is_legal_instance(FK_SCHEMA, fk_instance([('e1', None), ('e1', 's1')], ['s1']))
    junction = Instance((Table('E', ('Ke',), (('e1',),)), Table('S', ('Ks',), (('s1',),)),
                         Table('R', ('E_Ke', 'S_Ks'), (('e1', None),))))
    assert not is_legal_instance(JUNCTION_SCHEMA, junction)


def test_pool_size_bounds(monkeypatch):
    with pytest.raises(ValueError):
        enumerate_instances(FK_SCHEMA, 0)
    with pytest.raises(EnumerationCapExceededError):
        enumerate_instances(FK_SCHEMA, 4)
    monkeypatch.setenv(const.ENV_POOL_CAP, '1')
    assert pool_cap() == 1
    with pytest.raises(EnumerationCapExceededError):
        enumerate_instances(FK_SCHEMA, 2)


def test_relation_cap():
    with pytest.raises(EnumerationCapExceededError):
        enumerate_instances(fixture_schema('two_junctions.er'), 1)


def test_project_schema_keeps_one_relationship():
    entities = tuple(EntityType(name, f'K{name.lower()}') for name in ('A', 'B', 'C'))
    rels = (RelationshipType('AB', 'A', 'B', StructuralConstraint.of(1, 1), StructuralConstraint.of(0, 'N')),
            RelationshipType('AC', 'A', 'C', StructuralConstraint.of(1, 1), StructuralConstraint.of(0, 'N')),
            RelationshipType('BC', 'B', 'C', StructuralConstraint.of(0, 'N'), StructuralConstraint.of(0, 'N')))
    schema = transform(ErModel(entities, rels))
    projected = project_schema(schema, schema.encoding('AB'))
    assert [r.name for r in projected.relations] == ['A', 'B']
    assert projected.relation('A').column_names == ('Ka', 'B_Kb')
    junction = project_schema(schema, schema.encoding('BC'))
    assert [r.name for r in junction.relations] == ['B', 'C', 'BC']


def test_profile_of_single_linked_pair():
    profile = participation_profile(fk_instance([('e1', 's1')], ['s1']), FK_ENCODING)
    assert profile == ParticipationProfile(1, 1, 1, 1)


def test_profile_of_repeated_fk_value():
    profile = participation_profile(fk_instance([('e1', 's1'), ('e2', 's1')], ['s1', 's2']), FK_ENCODING)
    assert profile.right_max == 2
    assert profile.right_min == 0


def test_profile_of_null_fk():
    profile = participation_profile(fk_instance([('e1', None)], ['s1']), FK_ENCODING)
    assert (profile.left_min, profile.left_max) == (0, 0)


def test_profile_undefined_on_empty_entity_table():
    with pytest.raises(UndefinedProfileError):
        participation_profile(fk_instance([], ['s1']), FK_ENCODING)


def test_profile_when_the_right_side_holds_the_fk():
    schema = fixture_schema('one_to_one_right_total.er')
    instance = Instance((Table('E', ('Ke',), (('e1',), ('e2',))),
                         Table('S', ('Ks', 'E_Ke'), (('s1', 'e1'), ('s2', 'e1')))))
    profile = participation_profile(instance, schema.encoding('R'))
    assert profile == ParticipationProfile(left_min=0, left_max=2, right_min=1, right_max=1)


def test_holder_max_never_exceeds_one():
    for pool in (1, 2, 3):
        for _, profile in populated_profiles(enumerate_instances(FK_SCHEMA, pool), FK_ENCODING):
            assert profile.left_max <= 1


def test_witnesses_exist_at_pool_two():
    instances = enumerate_instances(FK_SCHEMA, 2)
    profiles = [p for _, p in populated_profiles(instances, FK_ENCODING)]
    assert any(None in instance.table('E').column('S_Ks') for instance in instances)
    assert any(p.right_max == 2 for p in profiles)
    assert any(p.left_min == 0 for p in profiles) and any(p.left_min >= 1 for p in profiles)
    assert any(p.right_min == 0 for p in profiles) and any(p.right_min >= 1 for p in profiles)


def test_instance_verdicts_for_fk_schema():
    verdicts = instance_verdicts(FK_SCHEMA, FK_ENCODING, 2)
    assert [v.slot for v in verdicts] == [Slot.LEFT_MIN, Slot.LEFT_MAX, Slot.RIGHT_MIN, Slot.RIGHT_MAX]
    assert [str(v.verdict) for v in verdicts] == ['NotRepresented', 'Exact(1)', 'NotRepresented',
                                                  'NotRepresented']
    repetition = verdicts[3].witness.evidence[-1]
    assert participation_profile(repetition, FK_ENCODING).right_max == 2


def test_instance_verdicts_for_junction_schema():
    verdicts = instance_verdicts(JUNCTION_SCHEMA, JUNCTION_ENCODING, 2)
    assert [str(v.verdict) for v in verdicts] == ['NotRepresented', 'LowerBoundOnly(1)', 'NotRepresented',
                                                  'LowerBoundOnly(1)']
    assert all(v.witness is not None for v in verdicts)


def test_pool_one_cannot_show_repetition():
    verdicts = instance_verdicts(FK_SCHEMA, FK_ENCODING, 1)
    assert str(verdicts[3].verdict) == 'Exact(1)'
    assert str(verdicts[0].verdict) == 'NotRepresented'


def test_populated_profiles_skip_empty_entity_tables():
    instances = enumerate_instances(FK_SCHEMA, 1)
    populated = [instance for instance, _ in populated_profiles(instances, FK_ENCODING)]
    assert populated == [fk_instance([('e1', None)], ['s1']), fk_instance([('e1', 's1')], ['s1'])]
