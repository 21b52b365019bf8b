"""Exception hierarchy shared across the pipeline.

The CLI maps these onto distinct exit codes: ConfigError -> 2,
DataError -> 3, BackendError -> 4.
"""


class SocMobilityError(Exception):
    """Base class for all pipeline errors."""


class ConfigError(SocMobilityError):
    """Invalid or incomplete configuration (bad paths, missing keys)."""


class DataError(SocMobilityError):
    """Malformed or inconsistent input data."""


class BackendError(SocMobilityError):
    """Completion-backend failure (transport, auth, timeout)."""


class AuthError(BackendError):
    """Authentication/authorization rejected; never retried."""


class TransportError(BackendError):
    """Transient transport failure; retryable up to the configured count."""


class ResponseFormatError(BackendError):
    """Backend returned a body the caller cannot interpret."""
