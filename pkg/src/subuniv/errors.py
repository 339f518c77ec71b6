"""Exception hierarchy shared by the whole package.

Everything raised on a bad input or an exceeded resource cap derives from
:class:`SubunivError`, so callers (and the CLI) can catch one type.
"""


class SubunivError(Exception):
    """Base class for all domain errors raised by subuniv."""


class ParseError(SubunivError):
    """Malformed automaton file or regular expression.

    Carries the 1-based ``line`` (automaton files) or 0-based ``column``
    (regexes) of the offending input when known.
    """

    def __init__(self, message, *, line=None, column=None):
        if line is not None:
            message = f"line {line}: {message}"
        elif column is not None:
            message = f"column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class SymbolError(SubunivError):
    """A word or pattern uses a symbol outside the declared alphabet."""


class DeterminismError(SubunivError):
    """A word-level operation was applied to a nondeterministic automaton."""


class BudgetError(SubunivError):
    """A configurable resource cap was exceeded (states, sigma, oracle work)."""


class OutOfRangeError(SubunivError):
    """An unrank index is at least the size of the ranked set."""
