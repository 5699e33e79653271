"""Enumerated families of single-relationship ER models."""
import itertools
from typing import List

from erschema.audit import const
from erschema.audit.model.er import (ONE, Cardinality, EntityType, ErModel,
                                     RelationshipType, StructuralConstraint,
                                     validate_model)
from erschema.audit.tools import (erschema_logger, get_erschema_logger,
                                  validate_type)


def _parse_max_samples(max_samples) -> tuple:
    samples = tuple(dict.fromkeys(Cardinality.parse(value) for value in max_samples))
    for sample in samples:
        if not sample.is_unbounded and sample.bound < 1:
            raise ValueError(f'Max sample {sample} is below one')
    if ONE not in samples:
        raise ValueError('max_samples must contain 1')
    if not any(sample.exceeds_one() for sample in samples):
        raise ValueError('max_samples must contain a value greater than 1')
    return samples


class FamilySpec():
    """Describe a family of ER models over one pair of entity types.

    Parameters
    ----------
    entity_pair : tuple of EntityType
        The two entity types; the first is the left side of every member.
    relationship_name : str, optional (Default: 'R')
        Name given to the relationship type of every member.
    max_samples : iterable, optional (Default: 1, 2, 3, N)
        Max values tried; ints, digit strings or ``'N'``. Must contain 1 and
        at least one value greater than 1.
    many_side_min_samples : iterable of int, optional (Default: 2)
        Finite stand-ins for a many-side min greater than one.
    one_to_one_min_rows, one_to_many_min_rows, many_to_many_min_rows : tuple, optional
        Min pairs tried per class. One-to-many rows are (one-side min,
        many-side min); ``'n'`` expands to every many-side min sample.

    Examples
    --------
    Default family over the entity types E and S
        >>> spec = FamilySpec((E, S))
        >>> len(enumerate_family(spec))
        76

    """

    entity_pair = ()
    relationship_name = const.DEFAULT_RELATIONSHIP_NAME
    max_samples = ()
    many_side_min_samples = ()
    one_to_one_min_rows = const.ONE_TO_ONE_MIN_ROWS
    one_to_many_min_rows = const.ONE_TO_MANY_MIN_ROWS
    many_to_many_min_rows = const.MANY_TO_MANY_MIN_ROWS

    # pylint: disable=too-many-arguments
    def __init__(self,
                 entity_pair,
                 relationship_name=const.DEFAULT_RELATIONSHIP_NAME,
                 max_samples=const.DEFAULT_MAX_SAMPLES,
                 many_side_min_samples=const.DEFAULT_MANY_SIDE_MIN_SAMPLES,
                 one_to_one_min_rows=const.ONE_TO_ONE_MIN_ROWS,
                 one_to_many_min_rows=const.ONE_TO_MANY_MIN_ROWS,
                 many_to_many_min_rows=const.MANY_TO_MANY_MIN_ROWS):
        """Initialize family spec instance."""
        entity_pair = tuple(entity_pair)
        if len(entity_pair) != 2 or not all(isinstance(e, EntityType) for e in entity_pair):
            raise ValueError('entity_pair must hold exactly two EntityType values')
        if entity_pair[0].name == entity_pair[1].name:
            raise ValueError('entity_pair must hold two distinct entity types')
        self.entity_pair = entity_pair

        validate_type(relationship_name, str, 'Unexpected value for relationship_name')
        self.relationship_name = relationship_name

        self.max_samples = _parse_max_samples(max_samples)

        for sample in many_side_min_samples:
            validate_type(sample, int, 'Unexpected value for many_side_min_samples')
            if sample < 2:
                raise ValueError('Many-side min samples must be greater than 1')
        self.many_side_min_samples = tuple(many_side_min_samples)

        self.one_to_one_min_rows = tuple(one_to_one_min_rows)
        self.one_to_many_min_rows = tuple(one_to_many_min_rows)
        self.many_to_many_min_rows = tuple(many_to_many_min_rows)

    @property
    def many_max_samples(self) -> tuple:
        """Max samples greater than one."""
        return tuple(sample for sample in self.max_samples if sample.exceeds_one())

    def expand_many_side_min(self, value) -> tuple:
        if value == const.MANY_SIDE_MIN:
            return self.many_side_min_samples
        return (value,)

    def __repr__(self):
        """Create string representation for FamilySpec Class."""
        return self.__str__()

    def __str__(self, prefix='  |-'):
        """Create string representation for FamilySpec Class."""
        ret_val = f'{str(self.__class__)}\n'
        ret_val += f'{prefix}entity_pair = {self.entity_pair[0].name}, {self.entity_pair[1].name}\n'
        ret_val += f'{prefix}relationship_name = {self.relationship_name}\n'
        ret_val += f'{prefix}max_samples = {", ".join(str(s) for s in self.max_samples)}\n'
        ret_val += f'{prefix}many_side_min_samples = {self.many_side_min_samples}'
        return ret_val


def _member(spec: FamilySpec, left: StructuralConstraint, right: StructuralConstraint) -> ErModel:
    first, second = spec.entity_pair
    rel = RelationshipType(spec.relationship_name, first.name, second.name, left, right)
    return ErModel(entities=spec.entity_pair, relationships=(rel,))


@erschema_logger
def enumerate_family(spec: FamilySpec) -> List[ErModel]:
    """List every valid member of the family, without duplicates.

    Members are 1:1 models for each one-to-one min row, 1:N models in both
    orientations for each one-to-many min row and many-side max sample, and
    M:N models for each many-to-many min row and pair of many-side maxes.

    Returns
    -------
    list of ErModel
        Members in that order; combinations breaking an ER invariant (for
        example a many-side min above the many-side max) are skipped.

    """
    candidates = []
    for m1, m2 in spec.one_to_one_min_rows:
        candidates.append(_member(spec, StructuralConstraint.of(m1, 1), StructuralConstraint.of(m2, 1)))

    for one_side_left in (True, False):
        for one_min, many_min in spec.one_to_many_min_rows:
            for many_min_value, many_max in itertools.product(spec.expand_many_side_min(many_min),
                                                              spec.many_max_samples):
                one = StructuralConstraint.of(one_min, 1)
                many = StructuralConstraint.of(many_min_value, many_max)
                pair = (one, many) if one_side_left else (many, one)
                candidates.append(_member(spec, *pair))

    for m1, m2 in spec.many_to_many_min_rows:
        for x1, x2 in itertools.product(spec.many_max_samples, repeat=2):
            candidates.append(_member(spec, StructuralConstraint.of(m1, x1), StructuralConstraint.of(m2, x2)))

    family = [model for model in dict.fromkeys(candidates) if validate_model(model).ok]
    get_erschema_logger().info('Enumerated %d family member(s) from %d candidate(s)',
                               len(family), len(candidates))
    return family
