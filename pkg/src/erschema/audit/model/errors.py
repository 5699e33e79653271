"""Exceptions raised by the erschema.audit package."""


class ErParseError(ValueError):
    """ER text could not be turned into a valid model.

    Parameters
    ----------
    diagnostics : list of Diagnostic
        Every problem found, each with its source span.

    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0].message if self.diagnostics else 'unknown error'
        super().__init__(f'{len(self.diagnostics)} diagnostic(s), first: {first}')


class InvalidModelError(ValueError):
    """An operation that requires a valid ER model received an invalid one."""

    def __init__(self, violations):
        self.violations = list(violations)
        codes = ', '.join(v.code for v in self.violations)
        super().__init__(f'Invalid ER model: {codes}')


class SchemaNameCollisionError(ValueError):
    """A generated column or relation name already exists in the schema."""


class EnumerationCapExceededError(RuntimeError):
    """The requested instance space exceeds the configured enumeration caps."""


class UndefinedProfileError(ValueError):
    """Participation is undefined because an entity table is empty."""
