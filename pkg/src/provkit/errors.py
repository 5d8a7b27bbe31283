"""Exception hierarchy shared across the engine."""


class ProvenanceError(Exception):
    """Base class for all engine errors."""


class KindMismatch(ProvenanceError):
    """A value's variant does not match the widget kind it is used with."""


class DomainViolation(ProvenanceError):
    """A value falls outside the widget's configured value domain."""


class NonMonotonicTimestamp(ProvenanceError):
    """An entry's timestamp precedes the log's latest entry."""


class EmptyLog(ProvenanceError):
    """The operation requires at least one recorded entry."""


class NoSuchState(ProvenanceError):
    """A recovery target does not resolve to any historical state."""


class UnsortedEntries(ProvenanceError):
    """Injected entries are not sorted by non-decreasing timestamp."""


class MalformedDocument(ProvenanceError):
    """The session file is not syntactically valid JSON."""


class SchemaViolation(ProvenanceError):
    """The session file parses but breaks a structural invariant.

    The message names the offending widget id and, where applicable,
    the entry index.
    """
