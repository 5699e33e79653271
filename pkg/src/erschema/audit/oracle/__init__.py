"""
    Define the brute-force oracles used to verify preservation verdicts.
"""
__all__ = ['FamilySpec', 'enumerate_family', 'Table', 'Instance', 'ParticipationProfile',
           'enumerate_instances', 'participation_profile', 'project_schema', 'is_legal_instance',
           'relationship_pairs', 'pool_cap', 'Witness', 'OracleVerdict', 'InverseImageClass',
           'inverse_image_verdicts', 'instance_verdicts', 'class_of', 'SlotComparison',
           'OracleJob', 'InverseImageJob', 'InstanceJob', 'family', 'instances', 'verdicts', 'jobs']

from .family import FamilySpec, enumerate_family
from .instances import (Instance, ParticipationProfile, Table, enumerate_instances,
                        is_legal_instance, participation_profile, pool_cap,
                        project_schema, relationship_pairs)
from .jobs import InstanceJob, InverseImageJob, OracleJob, SlotComparison
from .verdicts import (InverseImageClass, OracleVerdict, Witness, class_of,
                       instance_verdicts, inverse_image_verdicts)
