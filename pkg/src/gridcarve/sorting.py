"""Bucket-sorted vertex lists and the forward-only cursors that scan them.

Comparison sorting is deliberately absent: lists are built by two stable
bucketing passes (secondary key first), which keeps construction linear in
the number of vertices plus the grid extent.
"""

from __future__ import annotations

from enum import Enum
from itertools import chain
from typing import Iterable

from .errors import CursorExhaustedError
from .grid import Coord, GridGraph


class Order(Enum):
    BY_COLUMN = "by_column"  # sorted by (col, row)
    BY_ROW = "by_row"        # sorted by (row, col)


class SortedVertexList:
    """A vertex list in one of the two scan orders.

    ``entries`` is a plain list of ``(row, col)`` tuples; treat it as
    immutable once built.
    """

    __slots__ = ("order", "entries")

    def __init__(self, order: Order, entries: list[Coord]):
        self.order = order
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class AdvanceCounter:
    """Shared tally of cursor advances, for work-bound checks."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


class ScanCursor:
    """Forward-only position into a :class:`SortedVertexList`.

    The position may sit one past the last entry ("exhausted"); dereferencing
    there raises :class:`CursorExhaustedError`. Clones share the advance
    counter, so lookahead walks are charged to the same budget.
    """

    __slots__ = ("entries", "position", "counter")

    def __init__(self, source: SortedVertexList, counter: AdvanceCounter | None = None):
        self.entries = source.entries if isinstance(source, SortedVertexList) else source
        self.position = 0
        self.counter = counter

    @property
    def at_end(self) -> bool:
        return self.position >= len(self.entries)

    def current(self) -> Coord:
        if self.position >= len(self.entries):
            raise CursorExhaustedError("cursor dereferenced past end of list")
        return self.entries[self.position]

    def peek(self) -> Coord | None:
        """Entry after the current one, or None."""
        nxt = self.position + 1
        return self.entries[nxt] if nxt < len(self.entries) else None

    def advance(self) -> None:
        if self.position >= len(self.entries):
            raise CursorExhaustedError("cursor advanced past end of list")
        self.position += 1
        if self.counter is not None:
            self.counter.count += 1

    def advance_to(self, position: int) -> None:
        """Bulk commit of a forward scan done on ``entries`` directly."""
        if position < self.position:
            raise CursorExhaustedError("cursor may only move forward")
        if position > len(self.entries):
            raise CursorExhaustedError("cursor advanced past end of list")
        if self.counter is not None:
            self.counter.count += position - self.position
        self.position = position

    def clone(self) -> "ScanCursor":
        c = ScanCursor.__new__(ScanCursor)
        c.entries = self.entries
        c.position = self.position
        c.counter = self.counter
        return c


def _bucket_by(seq: Iterable[Coord], key_index: int, size: int) -> list[Coord]:
    # stable distribution pass; `size` buckets indexed by the chosen key
    buckets: list[list[Coord]] = [[] for _ in range(size)]
    appends = [b.append for b in buckets]
    for v in seq:
        appends[v[key_index]](v)
    return list(chain.from_iterable(buckets))


def build_sclv(g: GridGraph) -> SortedVertexList:
    """Column-ordered list of all vertices: by column, rows ascending inside."""
    # the graph's cached row index is already the stable row-grouped base
    by_row = chain.from_iterable(g._row_buckets())
    return SortedVertexList(Order.BY_COLUMN, _bucket_by(by_row, 1, g.c_max + 2))


def build_srlv(g: GridGraph, sclv: SortedVertexList | None = None) -> SortedVertexList:
    """Row-ordered list of all vertices: by row, columns ascending inside.

    An already built column-ordered list may be passed to reuse its work:
    it is exactly the stable column-grouped input the final row pass needs.
    """
    if sclv is not None and sclv.order is Order.BY_COLUMN:
        by_col = sclv.entries
    else:
        by_col = _bucket_by(g.vertices, 1, g.c_max + 2)
    return SortedVertexList(Order.BY_ROW, _bucket_by(by_col, 0, g.r_max + 2))


def build_srlv_of_set(vertices: Iterable[Coord]) -> SortedVertexList:
    """Row-ordered list of an arbitrary vertex collection."""
    vs = list(vertices)
    if not vs:
        return SortedVertexList(Order.BY_ROW, [])
    r_hi = max(v[0] for v in vs)
    c_hi = max(v[1] for v in vs)
    by_col = _bucket_by(vs, 1, c_hi + 1)
    return SortedVertexList(Order.BY_ROW, _bucket_by(by_col, 0, r_hi + 1))
