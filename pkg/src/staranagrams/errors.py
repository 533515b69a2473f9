"""Exception types raised across the package."""


class StarAnagramError(ValueError):
    """Base class for all domain errors."""


class InvalidPathError(StarAnagramError):
    pass


class NotAnAnagramError(StarAnagramError):
    pass


class WordTooShortError(StarAnagramError):
    pass


class PathCountExceeded(StarAnagramError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} possible paths exceeds cap of {cap}")
        self.count = count
        self.cap = cap


class InvalidEdgeLengthError(StarAnagramError):
    pass


class NoInverseError(StarAnagramError):
    pass


class OutOfRangeError(StarAnagramError):
    pass
