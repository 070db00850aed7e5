"""Exception hierarchy shared across the package.

Every error carries a machine-readable ``code`` (the class name) so the
HTTP layer can emit ``{"code": ..., "message": ...}`` bodies and the CLI
can map errors onto exit codes without string matching.
"""


class GausseerError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- parsing -------------------------------------------------------------

class ParseError(GausseerError):
    """A log file could not be parsed into a record."""


class EmptyInput(ParseError):
    pass


class NoRouteSection(ParseError):
    """No "#" route line found; not a Gaussian log or truncated."""


class MalformedRoute(ParseError):
    pass


# --- taxonomy ------------------------------------------------------------

class ConfigError(GausseerError):
    """Bad taxonomy config; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownKind(GausseerError):
    pass


# --- queries -------------------------------------------------------------

class QueryError(GausseerError):
    """Base class for invalid query input."""


class EmptyElements(QueryError):
    pass


class UnknownElement(QueryError):
    def __init__(self, symbol: str):
        super().__init__(f"unknown element symbol: {symbol!r}")
        self.symbol = symbol


class InvalidField(QueryError):
    pass


class BadParameter(QueryError):
    """Unparseable mode/connective or similar enumerated parameter."""


class BadPage(QueryError):
    pass


# --- index ---------------------------------------------------------------

class DuplicateId(GausseerError):
    pass


class NotFound(GausseerError):
    pass


class FormatError(GausseerError):
    """Snapshot file rejected: bad magic, version, length or checksum."""
