"""Error types shared across the library."""


class DomainError(Exception):
    """An operation was called outside its mathematical domain.

    Carries a short machine-readable ``kind`` plus a human-readable detail
    string; the CLI surfaces both.
    """

    def __init__(self, kind: str, detail: str = ""):
        super().__init__(detail or kind)
        self.kind = kind
        self.detail = detail or kind


class SchemaError(Exception):
    """Malformed input: unparseable JSON or JSON not matching a schema."""
