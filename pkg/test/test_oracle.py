from pathlib import Path

import pytest

from erschema.audit import Audit, const
from erschema.audit.analysis import Verdict, analyze
from erschema.audit.model import (EntityType, ErModel, RelationshipType, Slot,
                                  StructuralConstraint)
from erschema.audit.oracle import (FamilySpec, InstanceJob, InverseImageJob,
                                   OracleJob, OracleVerdict, class_of,
                                   enumerate_family, inverse_image_verdicts)
from erschema.audit.text import parse_er
from erschema.audit.transform import transform

FIXTURES = Path(__file__).parent / 'fixtures'

E = EntityType('E', 'Ke', ('A1', 'A2'))
S = EntityType('S', 'Ks', ('A1', 'A2'))

DEFAULT_FAMILY = enumerate_family(FamilySpec((E, S)))
DEFAULT_CLASSES = inverse_image_verdicts(DEFAULT_FAMILY)


def fixture_model(name):
    return parse_er((FIXTURES / name).read_text(encoding='utf-8'))


def model_of(left, right):
    return ErModel((E, S), (RelationshipType('R', 'E', 'S', StructuralConstraint.of(*left),
                                             StructuralConstraint.of(*right)),))


def verdict_strings(family_class):
    return [str(v.verdict) for v in family_class.verdicts]


def test_default_family_splits_into_three_classes():
    assert len(DEFAULT_CLASSES) == 3
    sizes = sorted(len(c.members) for c in DEFAULT_CLASSES.values())
    assert sizes == [19, 21, 36]


def test_fk_in_left_class():
    family_class = class_of(DEFAULT_CLASSES, fixture_model('one_to_one_left_total.er'))
    assert family_class.schema.encoding('R').relation_name == 'E'
    assert verdict_strings(family_class) == ['NotRepresented', 'Exact(1)', 'NotRepresented', 'NotRepresented']
    assert fixture_model('one_to_many.er') in family_class.members
    assert model_of((1, 1), (1, 1)) in family_class.members


def test_junction_class():
    family_class = class_of(DEFAULT_CLASSES, fixture_model('many_to_many.er'))
    assert verdict_strings(family_class) == ['NotRepresented', 'LowerBoundOnly(1)', 'NotRepresented',
                                             'LowerBoundOnly(1)']


def test_mixed_max_preimages_witness():
    family_class = class_of(DEFAULT_CLASSES, fixture_model('one_to_one_left_total.er'))
    witness = family_class.verdict(Slot.RIGHT_MAX).witness
    first, second = witness.evidence
    assert first.relationships[0].right_constraint.max != second.relationships[0].right_constraint.max
    assert all(transform(m) == transform(first) for m in (first, second))


def test_singleton_family_is_exact_everywhere():
    classes = inverse_image_verdicts([model_of((0, 3), (1, 'N'))])
    (family_class,) = classes.values()
    assert verdict_strings(family_class) == ['Exact(0)', 'Exact(3)', 'Exact(1)', 'Exact(N)']


def test_family_must_share_entity_pair():
    other = ErModel((E, EntityType('T', 'Kt')),
                    (RelationshipType('R', 'E', 'T', StructuralConstraint.of(0, 1), StructuralConstraint.of(0, 1)),))
    with pytest.raises(ValueError):
        inverse_image_verdicts([model_of((0, 1), (0, 1)), other])


def test_inverse_image_agrees_with_analyzer_on_every_member():
    for family_class in DEFAULT_CLASSES.values():
        oracle = [v.verdict for v in family_class.verdicts]
        for member in family_class.members:
            assert [v.verdict for v in analyze(member).relationship('R').verdicts] == oracle


def test_oracle_verdict_requires_witness():
    with pytest.raises(ValueError):
        OracleVerdict(Slot.LEFT_MIN, Verdict.not_represented())
    assert OracleVerdict(Slot.LEFT_MAX, Verdict.exact(1)).witness is None


def test_base_job_is_abstract():
    job = OracleJob(fixture_model('one_to_one_left_total.er'), 'R')
    with pytest.raises(NotImplementedError):
        job.compute_verdicts()
    with pytest.raises(NotImplementedError):
        job.get_oracle_name()


@pytest.mark.parametrize('fixture', ['one_to_one_left_total.er', 'one_to_one_right_total.er',
                                     'one_to_many.er', 'many_to_many.er'])
def test_jobs_agree_with_analyzer(fixture):
    model = fixture_model(fixture)
    report = analyze(model).relationship('R')
    inverse = InverseImageJob(model, 'R')
    assert inverse.process_job(report)
    assert inverse.job_state == 'DONE'
    instances = InstanceJob(model, 'R', transform(model), key_pool_size=2)
    assert instances.process_job(report)
    assert [c.outcome for c in instances.comparisons] == [const.AGREE] * 4


def test_instance_job_disagrees_at_pool_one():
    model = fixture_model('one_to_one_left_total.er')
    job = InstanceJob(model, 'R', transform(model), key_pool_size=1)
    assert not job.process_job(analyze(model).relationship('R'))
    disagreements = [c.slot for c in job.comparisons if not c.agrees]
    assert disagreements == [Slot.RIGHT_MAX]


def test_inverse_image_job_adds_the_input_model():
    model = model_of((1, 1), (5, 7))
    job = InverseImageJob(model, 'R')
    assert model in job.build_family()
    assert job.process_job(analyze(model).relationship('R'))


def test_job_rejects_report_for_other_relationship():
    model = fixture_model('two_junctions.er')
    job = InverseImageJob(model, 'AB')
    with pytest.raises(ValueError):
        job.process_job(analyze(model).relationship('CD'))


def test_audit_verify_both_oracles():
    audit = Audit((FIXTURES / 'one_to_one_left_total.er').read_text(encoding='utf-8'))
    verification = audit.verify()
    assert verification.agrees
    assert verification.outcome == const.AGREE
    assert len(verification.jobs) == 2
    assert len(verification.comparisons) == 8
    assert audit.last_schema is not None and audit.last_report is not None
    assert 'last_verification = AGREE' in str(audit)


def test_audit_verify_several_relationships():
    audit = Audit(fixture_model('two_junctions.er'))
    verification = audit.verify(oracle=const.INVERSE_IMAGE_ORACLE)
    assert [job.relationship_name for job in verification.jobs] == ['AB', 'CD']
    assert verification.agrees


def test_audit_rejects_unknown_oracle():
    with pytest.raises(ValueError):
        Audit(fixture_model('many_to_many.er')).verify(oracle='sat')


def test_family_members_colliding_with_an_attribute_are_left_out():
    # E already has a column named like the FK S would place in it
    clashing = EntityType('E', 'Ke', ('S_Ks',))
    plain = EntityType('S', 'Ks')
    classes = inverse_image_verdicts(enumerate_family(FamilySpec((clashing, plain))))
    assert len(classes) == 2
    assert sum(len(c.members) for c in classes.values()) == 55
    assert all(c.schema.encoding('R').relation_name != 'E' for c in classes.values())


def test_inverse_image_job_on_model_whose_family_collides():
    model = parse_er('entity E { key Ke; attr S_Ks; }\nentity S { key Ks; }\n'
                     'relationship R between E (min 0, max N) and S (min 0, max N);\n')
    job = InverseImageJob(model, 'R')
    assert job.process_job(analyze(model).relationship('R'))
    assert verdict_strings(job.family_class) == ['NotRepresented', 'LowerBoundOnly(1)', 'NotRepresented',
                                                 'LowerBoundOnly(1)']


def test_audit_verify_mixed_encodings_with_both_oracles():
    audit = Audit(fixture_model('mixed_encodings.er'))
    verification = audit.verify()
    assert [(job.relationship_name, job.get_oracle_name()) for job in verification.jobs] == [
        ('AB', const.INVERSE_IMAGE_ORACLE), ('AB', const.INSTANCES_ORACLE),
        ('BC', const.INVERSE_IMAGE_ORACLE), ('BC', const.INSTANCES_ORACLE)]
    assert verification.agrees
    assert len(audit.last_schema.relations) == 4
