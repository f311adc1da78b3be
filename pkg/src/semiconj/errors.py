"""Exception hierarchy shared by the library and the CLI."""


class SemigroupError(Exception):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"


class FormatError(SemigroupError, ValueError):
    code = "format"


class DomainError(SemigroupError, ValueError):
    code = "domain"


class SizeCapError(SemigroupError):
    code = "size_cap"


class UnsupportedError(SemigroupError):
    code = "unsupported"
