"""Small argument validators and environment lookups."""
import os


def validate_type(var_to_validate, expected_type, error_message):
    """Raise ValueError when the value is not of the expected type.

    Booleans are rejected where an int is expected.
    """
    if expected_type is int and isinstance(var_to_validate, bool):
        raise ValueError(error_message)
    if not isinstance(var_to_validate, expected_type):
        raise ValueError(error_message)
    return var_to_validate


def validate_field_options(field, available_options):
    """Raise ValueError when field is not one of the available options."""
    if field not in available_options:
        raise ValueError(f'Value {field} is not within the allowed options: {available_options}')
    return field


def load_environment_value(config_key, default=None) -> str:
    """Read a configuration value from the environment.

    Parameters
    ----------
    config_key : str
        Name of the environment variable.
    default : str, optional
        Value returned when the variable is not set. When omitted, a missing
        variable raises an exception.

    Raises
    ------
    RuntimeError: When the variable is not set and no default was given

    """
    value = os.getenv(config_key)
    if value is None:
        if default is None:
            raise RuntimeError(f'Environment variable {config_key} not set')
        return default
    return value
