"""Linear-time computation of a nice rectangle cover of a connected grid graph.

The cover is a sequence of axis-aligned rectangles over the super rectangle,
column-wise aligned (rectangles sharing a left column share a right column and
stack vertically), whose cells partition the vertex set into chunks of size
Theta(sqrt(n)) with O(sqrt(n)) prefix boundaries.

The pipeline makes two passes over bucket-sorted vertex lists:

1. A column scan cuts the graph into *column pairs* ``(c1, c2]`` whose bands
   each hold at least sqrt(n) vertices while the closing column holds at most
   sqrt(n).
2. A row scan cuts each band into rectangles the same way.

Every size threshold is an exact integer comparison (squares, never roots),
so results are reproducible across platforms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import isqrt

from .errors import CursorExhaustedError, NotConnectedError
from .grid import Coord, GridGraph
from .sorting import (
    AdvanceCounter,
    Order,
    ScanCursor,
    SortedVertexList,
    build_sclv,
    build_srlv,
)


def debug_asserts_enabled() -> bool:
    """Whether GRIDCARVE_DEBUG_ASSERTS=1 is set in the environment."""
    return os.environ.get("GRIDCARVE_DEBUG_ASSERTS") == "1"


class SqrtGate:
    """Exact integer comparisons against multiples of sqrt(n).

    For non-negative integers ``c`` and multipliers ``m``, ``c <= m*sqrt(n)``
    holds exactly when ``c*c <= m*m*n``, so every threshold here squares both
    sides instead of taking roots. ``sqrt_ceil`` is the smallest integer whose
    square reaches ``n``; it is the accumulation target of the scanners.
    """

    __slots__ = ("n", "sqrt_ceil")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.sqrt_ceil = isqrt(n - 1) + 1

    def at_most(self, count: int, multiple: int = 1) -> bool:
        """count <= multiple * sqrt(n)"""
        return count * count <= multiple * multiple * self.n

    def exceeds(self, count: int, multiple: int = 1) -> bool:
        """count > multiple * sqrt(n)"""
        return count * count > multiple * multiple * self.n

    def at_least_sqrt(self, count: int) -> bool:
        """count >= sqrt(n)"""
        return count * count >= self.n

    def below_sqrt(self, count: int) -> bool:
        """count < sqrt(n)"""
        return count * count < self.n

    def __repr__(self) -> str:  # pragma: no cover
        return f"SqrtGate(n={self.n}, sqrt_ceil={self.sqrt_ceil})"


# -- predicates ------------------------------------------------------------


def nice_column_check(gate: SqrtGate, col_size: int, between_size: int, distance: int) -> bool:
    """A column j is nice w.r.t. an earlier column i when the closing column is
    small, the crossed band is large, and the two columns are close:
    |column j| <= sqrt(n), |band (i, j]| >= sqrt(n), j - i <= 2 sqrt(n)."""
    return (
        gate.at_most(col_size)
        and gate.at_least_sqrt(between_size)
        and gate.at_most(distance, 2)
    )


def almost_nice_column_check(
    gate: SqrtGate,
    col_size: int,
    between_size: int,
    witness: tuple[int, int, int, int] | None = None,
) -> bool:
    """Almost nice: small closing column, large band, plus an inner nice column
    whose tail to j holds fewer than sqrt(n) vertices.

    ``witness`` packs the inner column's measurements as
    ``(col_size, between_size, distance, tail_size)``; ``None`` means no
    qualifying inner column exists.
    """
    if not (gate.at_most(col_size) and gate.at_least_sqrt(between_size)):
        return False
    if witness is None:
        return False
    w_col, w_between, w_dist, tail = witness
    return nice_column_check(gate, w_col, w_between, w_dist) and gate.below_sqrt(tail)


def nice_row_check(gate: SqrtGate, row_size: int, between_size: int) -> bool:
    """|closing row| <= 3 sqrt(n) and sqrt(n) <= |row band| <= 5 sqrt(n)."""
    return (
        gate.at_most(row_size, 3)
        and gate.at_least_sqrt(between_size)
        and gate.at_most(between_size, 5)
    )


def almost_nice_row_check(gate: SqrtGate, row_size: int, between_size: int) -> bool:
    """Like nice_row_check but the band may reach 6 sqrt(n) (closing segment)."""
    return (
        gate.at_most(row_size, 3)
        and gate.at_least_sqrt(between_size)
        and gate.at_most(between_size, 6)
    )


# -- debug audit -----------------------------------------------------------


class DebugAudit:
    """Cross-checks every scanner-maintained count against a brute-force area
    query at fixed checkpoints. Expensive; built only when requested or when
    GRIDCARVE_DEBUG_ASSERTS=1."""

    def __init__(self, g: GridGraph):
        self.g = g
        self.checks = 0

    def _demand(self, ok: bool, msg: str) -> None:
        self.checks += 1
        if not ok:
            raise AssertionError(f"scanner audit failed: {msg}")

    def column_settled(self, i: int, j: int, in_col: int, consumed: int) -> None:
        g = self.g
        self._demand(in_col == len(g.area_column(j)), f"|column {j}| != {in_col}")
        self._demand(
            consumed == len(g.area_between(i, j)),
            f"|band ({i}, {j}]| != {consumed}",
        )

    def column_rest(self, j: int, rest: int, target: int) -> None:
        actual = len(self.g.area_between(j, self.g.c_max + 1))
        self._demand(rest == min(target, actual), f"column lookahead past {j}: {rest}")

    def column_ran_off(self, i: int, consumed: int) -> None:
        self._demand(
            consumed == len(self.g.area_between(i, self.g.c_max + 1)),
            f"exhausted column scan from {i} consumed {consumed}",
        )

    def column_cursor(self, j: int, entry: Coord) -> None:
        self._demand(entry[1] == j + 1, f"cursor after column {j} sits at {entry}")

    def row_settled(self, band: tuple[int, int], k: int, p: int, in_row: int, consumed: int) -> None:
        g = self.g
        c1, c2 = band
        self._demand(
            in_row == len(g.area_row(c1, c2, p)),
            f"|row {p} of band ({c1}, {c2}]| != {in_row}",
        )
        self._demand(
            consumed == len(g.area_rect(c1, c2, k, p)),
            f"|rows ({k}, {p}] of band ({c1}, {c2}]| != {consumed}",
        )

    def row_rest(self, band: tuple[int, int], p: int, rest: int, target: int) -> None:
        c1, c2 = band
        actual = len(self.g.area_rect(c1, c2, p, self.g.r_max + 1))
        self._demand(rest == min(target, actual), f"row lookahead past {p}: {rest}")

    def row_cursor(self, band: tuple[int, int], p: int, entry: Coord) -> None:
        c1, c2 = band
        self._demand(entry[0] > p, f"cursor after row {p} sits at {entry}")
        if self.g.area_row(c1, c2, p + 1):
            # the next band row is occupied, so the cursor must rest exactly there
            self._demand(entry[0] == p + 1, f"cursor skipped occupied row {p + 1}")


# -- scanners ----------------------------------------------------------------


def next_nice_column(
    gate: SqrtGate,
    cursor: ScanCursor,
    prev: int,
    c_max: int,
    audit: DebugAudit | None = None,
) -> int:
    """Scan forward for the next almost nice column after ``prev``.

    Preconditions: the cursor sits on the first vertex of the first occupied
    column past ``prev`` in a column-ordered list, and at least sqrt(n)
    vertices remain from that position on.

    Accumulates vertices until their count reaches sqrt(n), finishes the
    column it landed in, skips any columns holding more than sqrt(n) vertices,
    and then looks ahead: if at least sqrt(n) vertices remain after the
    settled column j, returns j with the cursor advanced onto the first vertex
    past column j; otherwise returns the sentinel ``c_max + 1`` (cursor
    position is then unspecified; callers discard it).
    """
    entries = cursor.entries
    end = len(entries)
    pos = cursor.position
    if pos >= end:
        raise CursorExhaustedError("column scan started on an exhausted cursor")
    n = gate.n
    need = gate.sqrt_ceil  # consumed*consumed < n iff consumed < need
    consumed = 1
    current_col = entries[pos][1]
    in_col = 1
    while consumed < need:
        if pos + 1 >= end:
            raise CursorExhaustedError("column scan ran out before sqrt(n) vertices")
        nxt = entries[pos + 1][1]
        if nxt == current_col:
            in_col += 1
        else:
            current_col = nxt
            in_col = 1
        pos += 1
        consumed += 1
    # finish the column the sqrt(n)-th vertex landed in
    while pos + 1 < end and entries[pos + 1][1] == current_col:
        pos += 1
        consumed += 1
        in_col += 1
    # skip columns that are individually larger than sqrt(n)
    while in_col * in_col > n:
        if pos + 1 >= end:
            # every remaining column is oversized; the only nice cut left is
            # the empty sentinel column, and the suffix past it is empty
            cursor.advance_to(pos)
            if audit is not None:
                audit.column_ran_off(prev, consumed)
            return c_max + 1
        pos += 1
        consumed += 1
        current_col = entries[pos][1]
        in_col = 1
        while pos + 1 < end and entries[pos + 1][1] == current_col:
            pos += 1
            consumed += 1
            in_col += 1
    j = current_col
    cursor.advance_to(pos)
    if audit is not None:
        audit.column_settled(prev, j, in_col, consumed)
    # lookahead with a clone; the main cursor never moves during it
    temp = cursor.clone()
    rest = min(need, end - 1 - temp.position)  # walk stops at need or list end
    temp.advance_to(temp.position + rest)
    if audit is not None:
        audit.column_rest(j, rest, gate.sqrt_ceil)
    if rest >= need:
        cursor.advance()  # onto the first vertex past column j
        if audit is not None:
            audit.column_cursor(j, entries[cursor.position])
        return j
    return c_max + 1


def next_nice_row(
    gate: SqrtGate,
    cursor: ScanCursor,
    prev: int,
    r_max: int,
    audit: DebugAudit | None = None,
    band: tuple[int, int] | None = None,
) -> int:
    """Scan a band's row-ordered list for the next almost nice row after ``prev``.

    Same shape as the column scan, minus the oversized-skip loop: inside a
    band closed by an almost nice column, every row already holds at most
    3 sqrt(n) vertices, so the row the sqrt(n)-th vertex lands in is always
    acceptable. Returns the row index p (cursor advanced past row p) or the
    sentinel ``r_max + 1``.
    """
    entries = cursor.entries
    end = len(entries)
    pos = cursor.position
    if pos >= end:
        raise CursorExhaustedError("row scan started on an exhausted cursor")
    need = gate.sqrt_ceil
    consumed = 1
    current_row = entries[pos][0]
    in_row = 1
    while consumed < need:
        if pos + 1 >= end:
            raise CursorExhaustedError("row scan ran out before sqrt(n) vertices")
        nxt = entries[pos + 1][0]
        if nxt == current_row:
            in_row += 1
        else:
            current_row = nxt
            in_row = 1
        pos += 1
        consumed += 1
    while pos + 1 < end and entries[pos + 1][0] == current_row:
        pos += 1
        consumed += 1
        in_row += 1
    p = current_row
    cursor.advance_to(pos)
    if audit is not None and band is not None:
        audit.row_settled(band, prev, p, in_row, consumed)
    temp = cursor.clone()
    rest = min(need, end - 1 - temp.position)
    temp.advance_to(temp.position + rest)
    if audit is not None and band is not None:
        audit.row_rest(band, p, rest, gate.sqrt_ceil)
    if rest >= need:
        cursor.advance()
        if audit is not None and band is not None:
            audit.row_cursor(band, p, entries[cursor.position])
        return p
    return r_max + 1


# -- pipeline types ----------------------------------------------------------


@dataclass
class NiceColumnPair:
    """A band of columns ``(c1, c2]``; ``area_by_row`` is filled by attach_rows."""

    c1: int
    c2: int
    area_by_row: SortedVertexList | None = field(default=None, repr=False)


@dataclass(frozen=True)
class RclRectangle:
    """One cover rectangle: columns ``(c1, c2]``, rows ``(r1, r2]``, and the
    graph vertices inside it."""

    c1: int
    c2: int
    r1: int
    r2: int
    cell_set: frozenset[Coord]


@dataclass(frozen=True)
class RclCover:
    """An ordered rectangle cover of a graph's super rectangle."""

    rectangles: tuple[RclRectangle, ...]
    n: int
    r_max: int
    c_max: int

    def __len__(self) -> int:
        return len(self.rectangles)


# -- pipeline ---------------------------------------------------------------


def compute_nice_columns(
    g: GridGraph,
    sclv: SortedVertexList,
    counter: AdvanceCounter | None = None,
    audit: DebugAudit | None = None,
) -> tuple[list[NiceColumnPair], list[int]]:
    """Chain almost nice columns across the whole graph.

    Returns ``(pairs, cmap)`` where pairs[t] = (c1, c2) with c1 of the first
    pair 0 and c2 of the last pair c_max+1, consecutive pairs chained, and
    ``cmap[j]`` is the index t of the pair with ``c1 < j <= c2`` for every
    column ``1 <= j <= c_max + 1``.
    """
    if not g.is_connected():
        raise NotConnectedError("nice columns are defined for connected graphs only")
    gate = SqrtGate(g.n)
    cursor = ScanCursor(sclv, counter)
    c_max = g.c_max
    pairs: list[NiceColumnPair] = []
    cmap = [-1] * (c_max + 2)
    col = 1
    c1 = 0
    while True:
        c2 = next_nice_column(gate, cursor, c1, c_max, audit)
        pairs.append(NiceColumnPair(c1, c2))
        t = len(pairs) - 1
        while col <= c2:
            cmap[col] = t
            col += 1
        if c2 == c_max + 1:
            return pairs, cmap
        c1 = c2


def attach_rows(
    g: GridGraph,
    srlv: SortedVertexList,
    pairs: list[NiceColumnPair],
    cmap: list[int],
) -> list[NiceColumnPair]:
    """Split the global row-ordered list into one row-ordered list per pair.

    A single pass: appending in global row order keeps each band's list
    row-ordered with columns ascending inside a row.
    """
    buckets: list[list[Coord]] = [[] for _ in pairs]
    appends = [b.append for b in buckets]
    for v in srlv.entries:
        appends[cmap[v[1]]](v)
    for pair, bucket in zip(pairs, buckets):
        pair.area_by_row = SortedVertexList(Order.BY_ROW, bucket)
    return pairs


def rows_for_pair(
    gate: SqrtGate,
    pair: NiceColumnPair,
    r_max: int,
    counter: AdvanceCounter | None = None,
    audit: DebugAudit | None = None,
) -> list[RclRectangle]:
    """Cut one band into vertically chained rectangles.

    Row boundaries chain from 0 to ``r_max + 1``; each rectangle's cell set is
    the contiguous run of the band's row-ordered list its scan consumed.
    """
    svl = pair.area_by_row
    if svl is None:
        raise ValueError("attach_rows must populate the pair before row cutting")
    entries = svl.entries
    cursor = ScanCursor(svl, counter)
    band = (pair.c1, pair.c2)
    rects: list[RclRectangle] = []
    r1 = 0
    while True:
        start = cursor.position
        r2 = next_nice_row(gate, cursor, r1, r_max, audit, band)
        if r2 == r_max + 1:
            # the closing rectangle absorbs the short tail of the band
            cells = frozenset(entries[start:])
            cursor.advance_to(len(entries))
            rects.append(RclRectangle(pair.c1, pair.c2, r1, r2, cells))
            return rects
        cells = frozenset(entries[start : cursor.position])
        rects.append(RclRectangle(pair.c1, pair.c2, r1, r2, cells))
        r1 = r2


def compute_rcl_cover(
    g: GridGraph,
    *,
    counter: AdvanceCounter | None = None,
    audit: DebugAudit | None = None,
) -> RclCover:
    """Compute the nice rectangle cover of a connected grid graph in O(n).

    ``counter`` tallies every cursor advance (work-bound checks);
    ``audit`` cross-checks scanner counts against brute-force area queries
    and is created automatically when GRIDCARVE_DEBUG_ASSERTS=1.

    Raises NotConnectedError for disconnected input.
    """
    if not g.is_connected():
        raise NotConnectedError(
            f"cover pipeline requires a connected graph ({g.n} vertices given)"
        )
    if audit is None and debug_asserts_enabled():
        audit = DebugAudit(g)
    gate = SqrtGate(g.n)
    sclv = build_sclv(g)
    pairs, cmap = compute_nice_columns(g, sclv, counter=counter, audit=audit)
    attach_rows(g, build_srlv(g, sclv), pairs, cmap)
    rects: list[RclRectangle] = []
    for pair in pairs:
        rects.extend(rows_for_pair(gate, pair, g.r_max, counter=counter, audit=audit))
    return RclCover(tuple(rects), n=g.n, r_max=g.r_max, c_max=g.c_max)
