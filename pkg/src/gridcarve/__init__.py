"""Linear-time rectangle covers and path decompositions for grid graphs.

A connected set of integer lattice points (a grid graph, with edges
between points at Manhattan distance 1) is partitioned into column-wise
aligned rectangles whose cell sets have size Theta(sqrt(n)) and whose
prefix boundaries stay O(sqrt(n)).  The cover converts directly into a
path decomposition of width O(sqrt(n)).
"""

from .cover import (
    RclCover,
    RclRectangle,
    SqrtGate,
    compute_rcl_cover,
)
from .errors import (
    BadArgumentsError,
    CursorExhaustedError,
    EmptyInputError,
    GridcarveError,
    GridParseError,
    IndexOutOfRangeError,
    InvalidCoverError,
    NotASubsetError,
    NotAVertexError,
    NotConnectedError,
)
from .generate import generate
from .grid import GridGraph, components, normalize
from .pathdecomp import PathDecomposition, build_path_decomposition, width
from .verify import (
    VerificationReport,
    Violation,
    verify_nice_decomposition,
    verify_pair_predicates,
    verify_path_decomposition,
    verify_rcl_cover,
    verify_width_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BadArgumentsError",
    "CursorExhaustedError",
    "EmptyInputError",
    "GridGraph",
    "GridParseError",
    "GridcarveError",
    "IndexOutOfRangeError",
    "InvalidCoverError",
    "NotASubsetError",
    "NotAVertexError",
    "NotConnectedError",
    "PathDecomposer",
    "PathDecomposition",
    "RclCover",
    "RclCoverClusterer",
    "RclRectangle",
    "SqrtGate",
    "VerificationReport",
    "Violation",
    "build_path_decomposition",
    "components",
    "compute_rcl_cover",
    "generate",
    "normalize",
    "verify_nice_decomposition",
    "verify_pair_predicates",
    "verify_path_decomposition",
    "verify_rcl_cover",
    "verify_width_bound",
    "width",
]

_LAZY = {"RclCoverClusterer", "PathDecomposer"}


def __getattr__(name):
    # estimators pull in numpy + scikit-learn; keep that off the CLI path
    if name in _LAZY:
        from . import estimators

        value = getattr(estimators, name)
        globals()[name] = value
        return value
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(set(globals()) | _LAZY)
