"""Exception types shared across the library."""


class GridcarveError(Exception):
    """Base class for every error raised by this package."""


class EmptyInputError(GridcarveError):
    """A vertex collection was empty where at least one vertex is required."""


class NotAVertexError(GridcarveError):
    """A coordinate was used as a graph vertex but is not one."""


class NotASubsetError(GridcarveError):
    """A vertex set argument contains coordinates outside the graph."""


class IndexOutOfRangeError(GridcarveError):
    """A row or column index lies outside the super rectangle."""


class NotConnectedError(GridcarveError):
    """The pipeline was handed a grid graph that is not connected."""


class CursorExhaustedError(GridcarveError):
    """A scan cursor was dereferenced or advanced past the end of its list."""


class InvalidCoverError(GridcarveError):
    """A rectangle cover does not satisfy the structural cover conditions."""


class GridParseError(GridcarveError):
    """A grid file could not be parsed."""


class BadArgumentsError(GridcarveError):
    """Command line arguments are malformed or inconsistent."""
