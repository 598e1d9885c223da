"""Exception types shared across the package."""


class TraceFormatError(ValueError):
    """A trace file line that cannot be parsed.

    Carries the 1-based line number of the offending line in ``line_no``.
    """

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyTraceError(ValueError):
    """A trace file or dataset with zero records where records are required."""


class RecordValidationError(ValueError):
    """A visit record violating its invariants.

    Carries the 0-based index of the offending record in ``index``.
    """

    def __init__(self, index, message):
        super().__init__(f"record {index}: {message}")
        self.index = index


class UnknownIdError(KeyError):
    """A user, title, or cell identifier not present in the dataset."""

    def __init__(self, kind, identifier):
        super().__init__(f"unknown {kind}: {identifier!r}")
        self.kind = kind
        self.identifier = identifier
