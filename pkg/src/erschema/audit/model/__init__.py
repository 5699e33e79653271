"""
    Define the ER model and relational schema types.
"""
__all__ = [
    'Cardinality', 'StructuralConstraint', 'EntityType', 'RelationshipType', 'ErModel',
    'Side', 'Slot', 'SLOT_ORDER', 'ConstraintSlot', 'Classification', 'RelationshipKind',
    'Violation', 'ValidationResult', 'UNBOUNDED', 'ZERO', 'ONE',
    'validate_model', 'classify_relationship', 'constraint_slots',
    'Column', 'ColumnRole', 'ForeignKey', 'RelationSchema', 'RelationalSchema',
    'RelationshipEncoding', 'EncodingKind', 'validate_schema',
    'ErParseError', 'InvalidModelError', 'SchemaNameCollisionError',
    'EnumerationCapExceededError', 'UndefinedProfileError',
    'er', 'rds', 'errors'
]

from .er import (ONE, SLOT_ORDER, UNBOUNDED, ZERO, Cardinality, Classification,
                 ConstraintSlot, EntityType, ErModel, RelationshipKind,
                 RelationshipType, Side, Slot, StructuralConstraint,
                 ValidationResult, Violation, classify_relationship,
                 constraint_slots, validate_model)
from .errors import (EnumerationCapExceededError, ErParseError,
                     InvalidModelError, SchemaNameCollisionError,
                     UndefinedProfileError)
from .rds import (Column, ColumnRole, EncodingKind, ForeignKey, RelationalSchema,
                  RelationSchema, RelationshipEncoding, validate_schema)
