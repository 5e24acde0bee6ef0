"""Exception hierarchy shared by every module."""


class BvassError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BvassError):
    """Malformed model or presentation text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class ResourceLimitError(BvassError):
    """A configured cap (cells, candidates, rounds, nodes, ...) was exceeded.

    ``stats`` carries whatever partial counters the failing computation had
    accumulated and ``node`` the node being processed, when relevant.
    """

    def __init__(self, message, stats=None, node=None):
        super().__init__(message)
        self.stats = dict(stats or {})
        self.node = node
