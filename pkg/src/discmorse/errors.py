"""Exception types shared across the package."""


class DiscMorseError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(DiscMorseError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MatchingError(DiscMorseError):
    """A set of Hasse edges that does not form a usable matching.

    ``cell`` names the first cell covered twice, when that is the problem.
    """

    def __init__(self, message: str, cell: tuple[int, ...] | None = None):
        self.cell = cell
        super().__init__(message)


class NotMorseError(DiscMorseError):
    """Operation requires a Morse matching but the matching has a closed V-path."""


class EliminationError(DiscMorseError):
    """An elimination step could not be performed.

    ``step`` is the 0-based index into the order, ``pair`` the offending
    matched pair, ``pivot`` the non-invertible pivot value found there.
    """

    def __init__(self, message: str, step: int, pair=None, pivot: int | None = None):
        self.step = step
        self.pair = pair
        self.pivot = pivot
        super().__init__(message)
