"""Exception types shared across the toolkit."""


class PunkitError(Exception):
    """Base class for all toolkit errors."""


class ValidationError(PunkitError, ValueError):
    """A domain object violated one of its invariants."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        prefix = ""
        if line is not None:
            prefix += f"line {line}: "
        if field is not None:
            prefix += f"field '{field}': "
        super().__init__(prefix + message)


class ParseError(PunkitError, ValueError):
    """An input file could not be parsed."""

    def __init__(self, message, record=None):
        self.record = record
        if record is not None:
            message = f"record {record}: {message}"
        super().__init__(message)


class BackendError(PunkitError, RuntimeError):
    """An external backend (classifier or generator) misbehaved.

    ``retryable`` marks transport-level failures where a retry might help;
    contract violations (malformed responses, empty generations) are final.
    """

    def __init__(self, message, retryable=False):
        self.retryable = retryable
        super().__init__(message)
