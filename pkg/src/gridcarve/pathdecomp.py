"""Path decompositions of width O(sqrt(n)) built from rectangle covers.

Bag i is the rectangle's cell set, the two full graph columns flanking its
band, and the band's slice of the previous rectangle's closing row (the row
its chain hands over). Every vertex's bag indices form a contiguous run and
every implicit edge lands in some bag, so the result is a path decomposition;
each ingredient is O(sqrt(n)), so the width is too.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .cover import RclCover
from .errors import InvalidCoverError
from .grid import Coord, GridGraph


@dataclass(frozen=True)
class PathDecomposition:
    """Bags indexed along the path, each a frozen vertex set."""

    bags: tuple[frozenset[Coord], ...]

    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def __len__(self) -> int:
        return len(self.bags)


def width(pd: PathDecomposition) -> int:
    """Largest bag size minus one."""
    return pd.width()


def _check_cover_structure(g: GridGraph, cover: RclCover) -> None:
    # One forward pass. For sequences this is equivalent to the four cover
    # conditions: groups must be contiguous and ordered, so it suffices to
    # check each rectangle against its predecessor plus the two chain ends.
    rects = cover.rectangles
    if not rects:
        raise InvalidCoverError("cover has no rectangles")
    c_hi = g.c_max + 1
    r_hi = g.r_max + 1
    first = rects[0]
    if first.c1 != 0 or first.r1 != 0:
        raise InvalidCoverError("cover must open at column 0, row 0")
    prev = None
    for idx, r in enumerate(rects):
        if not (0 <= r.c1 < r.c2 <= c_hi and 0 <= r.r1 < r.r2 <= r_hi):
            raise InvalidCoverError(
                f"rectangle {idx} has degenerate or out-of-range extents"
            )
        if prev is not None:
            if r.c1 == prev.c1:
                if r.c2 != prev.c2:
                    raise InvalidCoverError(
                        f"rectangle {idx} changes c2 inside its column group"
                    )
                if r.r1 != prev.r2:
                    raise InvalidCoverError(
                        f"rectangle {idx} breaks its column group's row chain"
                    )
            else:
                if prev.r2 != r_hi:
                    raise InvalidCoverError(
                        f"column group ending at rectangle {idx - 1} stops short of row {r_hi}"
                    )
                if r.c1 != prev.c2 or r.r1 != 0:
                    raise InvalidCoverError(
                        f"rectangle {idx} breaks the column chain"
                    )
        prev = r
    if prev.c2 != c_hi or prev.r2 != r_hi:
        raise InvalidCoverError("cover does not close at the far corner")


def build_path_decomposition(g: GridGraph, cover: RclCover) -> PathDecomposition:
    """Assemble the bags for a cover of ``g`` in O(n + total bag size).

    Raises InvalidCoverError when the rectangle sequence breaks any of the
    structural cover conditions. Cell sets are trusted as stored; run
    verify_rcl_cover first for hand-built covers.
    """
    _check_cover_structure(g, cover)
    rects = cover.rectangles
    # each rectangle hands its closing row to the next bag; across a group
    # border the closing row is r_max + 1 and therefore empty
    row_buckets = g._row_buckets()
    harvests: list[list[Coord]] = [[] for _ in rects]
    for i in range(len(rects) - 1):
        r = rects[i]
        if r.r2 <= g.r_max:
            harvests[i + 1] = [v for v in row_buckets[r.r2] if r.c1 < v[1] <= r.c2]
    col_buckets = g._col_buckets()
    bags: list[frozenset[Coord]] = []
    group: tuple[int, int] | None = None
    col_left: list[Coord] = []
    col_right: list[Coord] = []
    for i, r in enumerate(rects):
        if (r.c1, r.c2) != group:
            group = (r.c1, r.c2)
            col_left = col_buckets[r.c1]
            col_right = col_buckets[r.c2]
        bags.append(frozenset(chain(r.cell_set, col_left, col_right, harvests[i])))
    return PathDecomposition(tuple(bags))
