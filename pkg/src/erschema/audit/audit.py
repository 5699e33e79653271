"""Represent an audit of one ER model: transformation, analysis and verification."""
from dataclasses import dataclass
from typing import Tuple

from erschema.audit import const
from erschema.audit.analysis import (PreservationReport, PreservationSummary,
                                     analyze, summarize)
from erschema.audit.model import ErModel, RelationalSchema
from erschema.audit.oracle import (InstanceJob, InverseImageJob, OracleJob,
                                   SlotComparison)
from erschema.audit.text import parse_er
from erschema.audit.tools import (erschema_logger, get_erschema_logger,
                                  validate_field_options, validate_type)
from erschema.audit.transform import transform


@dataclass(frozen=True)
class Verification:
    """Every oracle job run by a verification, in execution order."""
    jobs: Tuple[OracleJob, ...] = ()

    @property
    def comparisons(self) -> Tuple[SlotComparison, ...]:
        return tuple(c for job in self.jobs for c in job.comparisons)

    @property
    def agrees(self) -> bool:
        return all(job.agrees for job in self.jobs)

    @property
    def outcome(self) -> str:
        return const.AGREE if self.agrees else const.DISAGREE


class Audit():
    """Represent the audit of an ER model.

    Parameters
    ----------
    model : ErModel or str
        Model to audit. A str is parsed as ER notation, raising ErParseError
        on invalid text.

    Examples
    --------
    Auditing the one-to-one model of two entity types
        >>> audit = Audit('entity E { key Ke; }\\nentity S { key Ks; }\\n'
        ...               'relationship R between E (min 1, max 1) and S (min 0, max 1);\\n')
        >>> print(render_rds(audit.transform_model()), end='')
        E[Ke*, S_Ks→S.Ks?]
        S[Ks*]
        >>> audit.verify().outcome
        'AGREE'

    """

    model = None
    last_schema = None
    last_report = None
    last_summary = None
    last_verification = None

    def __init__(self, model):
        """Instantiate class."""
        if isinstance(model, str):
            model = parse_er(model)
        validate_type(model, ErModel, 'Unexpected value for model')
        self.model = model
        self.last_schema = None
        self.last_report = None
        self.last_summary = None
        self.last_verification = None
        self.log = get_erschema_logger()

    @erschema_logger
    def transform_model(self) -> RelationalSchema:
        """Transform the model and keep the schema in ``last_schema``."""
        self.last_schema = transform(self.model)
        return self.last_schema

    @erschema_logger
    def analyze_model(self) -> PreservationReport:
        """Analyze the model and keep the report and its summary."""
        self.last_report = analyze(self.model)
        self.last_summary = summarize(self.last_report)
        return self.last_report

    def summarize(self) -> PreservationSummary:
        if self.last_summary is None:
            self.analyze_model()
        return self.last_summary

    @erschema_logger
    def verify(self, oracle=const.BOTH_ORACLES, key_pool_size=const.DEFAULT_POOL_SIZE,
               max_samples=const.DEFAULT_MAX_SAMPLES) -> Verification:
        """Run the selected oracles on every relationship and compare with the analyzer.

        Parameters
        ----------
        oracle : str, optional (Default: 'both')
            One of 'inverse-image', 'instances' or 'both'.
        key_pool_size : int, optional (Default: 2)
            Key pool per relation for the instance oracle.
        max_samples : iterable, optional (Default: 1, 2, 3, N)
            Max values of the families built for the inverse-image oracle.

        Returns
        -------
        Verification
            The jobs run, with their slot comparisons.

        Raises
        ------
        EnumerationCapExceededError: When key_pool_size exceeds the pool cap
        SchemaNameCollisionError: When the model cannot be transformed

        """
        validate_field_options(oracle, const.ORACLE_OPTIONS)
        schema = self.transform_model()
        report = self.analyze_model()

        jobs = []
        for rel in self.model.relationships:
            if oracle in (const.INVERSE_IMAGE_ORACLE, const.BOTH_ORACLES):
                jobs.append(InverseImageJob(self.model, rel.name, max_samples=max_samples))
            if oracle in (const.INSTANCES_ORACLE, const.BOTH_ORACLES):
                jobs.append(InstanceJob(self.model, rel.name, schema, key_pool_size=key_pool_size))
        for job in jobs:
            job.process_job(report.relationship(job.relationship_name))

        self.last_verification = Verification(tuple(jobs))
        self.log.info('Verification of %d relationship(s): %s',
                      len(self.model.relationships), self.last_verification.outcome)
        return self.last_verification

    def __repr__(self):
        """Create string representation for Audit Class."""
        return self.__str__()

    def __str__(self, prefix='  |-'):
        """Create string representation for Audit Class."""
        ret_val = f'{str(self.__class__)}\n'
        ret_val += f'{prefix}entities = {", ".join(e.name for e in self.model.entities)}\n'
        ret_val += f'{prefix}relationships = {", ".join(r.name for r in self.model.relationships)}\n'
        verified = self.last_verification.outcome if self.last_verification else '<NotVerified>'
        ret_val += f'{prefix}last_verification = {verified}'
        return ret_val
