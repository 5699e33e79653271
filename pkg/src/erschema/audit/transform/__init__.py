"""
    Define the ER-to-relational transformation and schema comparisons.
"""
__all__ = ['FkPlacement', 'PlacementReason', 'transform', 'transform_entities',
           'transform_many_to_many', 'place_fk', 'place_fk_one_to_one', 'place_fk_one_to_many',
           'fk_column_name', 'schema_equal', 'schema_signature', 'schema_isomorphic', 'transformer']

from .transformer import (FkPlacement, PlacementReason, fk_column_name, place_fk,
                          place_fk_one_to_many, place_fk_one_to_one,
                          schema_equal, schema_isomorphic, schema_signature,
                          transform, transform_entities, transform_many_to_many)
