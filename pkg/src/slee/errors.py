"""Exception types shared across the package."""


class SleeError(Exception):
    """Base class for every error raised by this package."""


class GraphError(SleeError, ValueError):
    """Invalid graph construction or vertex reference."""


class CostGuardError(SleeError):
    """An operation refused to run because its input exceeds the desk-scale cap."""


class Graph6Error(SleeError, ValueError):
    """Malformed graph6 input.

    ``kind`` names the failure category so callers can tell a bad header
    from a truncated bit field without parsing the message.
    """

    EMPTY = "empty"
    FOREIGN = "foreign-format"
    HEADER_LINE = "header-line"
    HEADER = "header"
    NON_ASCII = "non-ascii"
    CHARACTER = "character"
    TRUNCATED = "truncated"
    TRAILING = "trailing"
    PADDING = "padding"
    TOO_LARGE = "too-large"

    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class EdgeListError(SleeError, ValueError):
    """Malformed plain edge-list text."""
