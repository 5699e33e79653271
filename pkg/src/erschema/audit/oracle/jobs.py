"""Oracle runs for one relationship, compared slot by slot with the analyzer."""
from dataclasses import dataclass
from datetime import datetime
from typing import List

from erschema.audit import const
from erschema.audit.analysis.analyzer import RelationshipReport
from erschema.audit.analysis.verdicts import Verdict
from erschema.audit.model.er import ErModel, Slot
from erschema.audit.tools import get_erschema_logger, validate_type

from .family import FamilySpec, enumerate_family
from .verdicts import (OracleVerdict, class_of, instance_verdicts,
                       inverse_image_verdicts)


@dataclass(frozen=True)
class SlotComparison:
    """One oracle verdict next to the analyzer's verdict on the same slot."""
    relationship_name: str
    oracle: str
    oracle_verdict: OracleVerdict
    analyzer_verdict: Verdict

    @property
    def slot(self) -> Slot:
        return self.oracle_verdict.slot

    @property
    def agrees(self) -> bool:
        return self.oracle_verdict.verdict == self.analyzer_verdict

    @property
    def outcome(self) -> str:
        return const.AGREE if self.agrees else const.DISAGREE


class OracleJob():
    """Run one oracle over one relationship and compare it with the analyzer.

    This class is not to be instantiated directly, rather to extend in order
    to implement ``get_oracle_name`` and ``compute_verdicts``.

    Parameters
    ----------
    model : ErModel
        Valid model holding the relationship.
    relationship_name : str
        Relationship to verify.

    """

    model = None
    relationship_name = ''
    job_state = ''
    submitted_datetime = 0
    verdicts = []
    comparisons = []

    def __init__(self, model: ErModel, relationship_name: str):
        """Initialize oracle job."""
        validate_type(model, ErModel, 'Unexpected value for model')
        validate_type(relationship_name, str, 'Unexpected value for relationship_name')
        model.relationship(relationship_name)
        self.model = model
        self.relationship_name = relationship_name
        self.job_state = 'PENDING'
        self.submitted_datetime = datetime.now()
        self.verdicts = []
        self.comparisons = []
        self.log = get_erschema_logger()

    def get_oracle_name(self) -> str:
        """Name printed in verification reports.

        Raises
        ------
        - NotImplementedError when the method has not been defined by the extending class

        """
        raise NotImplementedError('Method has not been defined')

    def compute_verdicts(self) -> List[OracleVerdict]:
        """Run the oracle and return its four verdicts in slot order.

        Raises
        ------
        - NotImplementedError when the method has not been defined by the extending class

        """
        raise NotImplementedError('Method has not been defined')

    def process_job(self, expected: RelationshipReport) -> bool:
        """Run the oracle and compare every slot with the analyzer's report.

        Parameters
        ----------
        expected: RelationshipReport
            The analyzer's verdicts for the same relationship.

        Returns
        -------
        Boolean : True when the oracle agrees with the analyzer on all four slots.

        """
        if expected.relationship_name != self.relationship_name:
            raise ValueError(f'Report is for {expected.relationship_name}, not {self.relationship_name}')
        self.job_state = 'RUNNING'
        self.verdicts = self.compute_verdicts()
        self.comparisons = [SlotComparison(self.relationship_name, self.get_oracle_name(), verdict,
                                           expected.verdict(verdict.slot).verdict)
                            for verdict in self.verdicts]
        self.job_state = 'DONE'
        agreed = self.agrees
        self.log.info('%s oracle on %s: %s', self.get_oracle_name(), self.relationship_name,
                      const.AGREE if agreed else const.DISAGREE)
        return agreed

    @property
    def agrees(self) -> bool:
        return bool(self.comparisons) and all(c.agrees for c in self.comparisons)

    def __repr__(self):
        """Create string representation for OracleJob Class."""
        return self.__str__()

    def __str__(self, prefix='  |-'):
        """Create string representation for OracleJob Class."""
        ret_val = f'{str(self.__class__)}\n'
        ret_val += f'{prefix}relationship_name = {self.relationship_name}\n'
        ret_val += f'{prefix}job_state = {self.job_state}\n'
        ret_val += f'{prefix}submitted_datetime = {self.submitted_datetime}\n'
        ret_val += f'{prefix}comparisons = {len(self.comparisons)}'
        return ret_val


class InverseImageJob(OracleJob):
    """Verify a relationship against the inverse image of its RDS within a family.

    The family spans the relationship's entity pair; the relationship's own
    submodel is added to it so that its RDS class is always present.
    """

    max_samples = const.DEFAULT_MAX_SAMPLES
    family_class = None

    def __init__(self, model, relationship_name, max_samples=const.DEFAULT_MAX_SAMPLES):
        """Initialize inverse image job."""
        super().__init__(model, relationship_name)
        self.max_samples = tuple(max_samples)
        self.family_class = None

    # pylint: disable=no-self-use
    def get_oracle_name(self):
        """Get oracle name."""
        return const.INVERSE_IMAGE_ORACLE

    def build_family(self) -> List[ErModel]:
        submodel = self.model.submodel(self.relationship_name)
        rel = submodel.relationships[0]
        spec = FamilySpec((self.model.entity(rel.left_entity), self.model.entity(rel.right_entity)),
                          relationship_name=rel.name, max_samples=self.max_samples)
        family = enumerate_family(spec)
        if submodel not in family:
            family.append(submodel)
        return family

    def compute_verdicts(self):
        """Compute verdicts of the class holding the relationship's own RDS."""
        classes = inverse_image_verdicts(self.build_family())
        self.family_class = class_of(classes, self.model.submodel(self.relationship_name))
        return list(self.family_class.verdicts)


class InstanceJob(OracleJob):
    """Verify a relationship against the legal instances of its RDS."""

    key_pool_size = const.DEFAULT_POOL_SIZE
    schema = None

    def __init__(self, model, relationship_name, schema, key_pool_size=const.DEFAULT_POOL_SIZE):
        """Initialize instance job."""
        super().__init__(model, relationship_name)
        validate_type(key_pool_size, int, 'Unexpected value for key_pool_size')
        self.schema = schema
        self.key_pool_size = key_pool_size

    # pylint: disable=no-self-use
    def get_oracle_name(self):
        """Get oracle name."""
        return const.INSTANCES_ORACLE

    def compute_verdicts(self):
        """Compute verdicts from instances enumerated within the key pool."""
        return instance_verdicts(self.schema, self.schema.encoding(self.relationship_name), self.key_pool_size)
