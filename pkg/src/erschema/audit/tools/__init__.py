"""Define logging and validation helpers."""
__all__ = ['erschema_logger', 'get_erschema_logger', 'validate_type',
           'validate_field_options', 'load_environment_value']

from .logger import erschema_logger, get_erschema_logger
from .validation import load_environment_value, validate_field_options, validate_type
