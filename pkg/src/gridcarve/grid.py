"""Grid-graph model with naive, verifier-grade geometry queries.

A grid graph is a finite set of lattice points; edges are implicit, joining
any two vertices at Manhattan distance one. Vertices are ``(row, col)`` pairs
of non-negative integers. A normalized graph has its smallest occupied row
and column both equal to 1, so the enclosing super rectangle spans rows
``0 .. r_max + 1`` and columns ``0 .. c_max + 1`` with an empty band on every
side.

Everything here favours obviousness over speed: range queries scan dense
per-column / per-row buckets. The decomposition pipeline keeps its own
bookkeeping and never depends on these scans being fast; the verifiers depend
on them being simple.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    EmptyInputError,
    IndexOutOfRangeError,
    NotASubsetError,
    NotAVertexError,
)

Coord = tuple[int, int]

_STEPS = ((-1, 0), (1, 0), (0, -1), (0, 1))


class GridGraph:
    """An immutable, normalized grid graph.

    Construct through :func:`normalize`; the constructor itself insists the
    vertex set is already normalized. Connectivity is not required at
    construction time (the cover pipeline checks it separately), but it is
    cached once computed.
    """

    __slots__ = ("vertices", "n", "r_max", "c_max", "_cols", "_rows", "_connected")

    def __init__(self, vertices: frozenset[Coord]):
        if not vertices:
            raise EmptyInputError("a grid graph needs at least one vertex")
        r_min = min(v[0] for v in vertices)
        c_min = min(v[1] for v in vertices)
        if r_min != 1 or c_min != 1:
            raise ValueError(
                f"vertex set is not normalized (min row {r_min}, min col {c_min})"
            )
        self.vertices = vertices
        self.n = len(vertices)
        self.r_max = max(v[0] for v in vertices)
        self.c_max = max(v[1] for v in vertices)
        self._cols: list[list[Coord]] | None = None
        self._rows: list[list[Coord]] | None = None
        self._connected: bool | None = None

    # -- basic queries ---------------------------------------------------

    def __contains__(self, v: Coord) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return self.n

    def neighbors(self, v: Coord) -> set[Coord]:
        """Vertices of the graph at Manhattan distance one from ``v``."""
        if v not in self.vertices:
            raise NotAVertexError(f"{v} is not a vertex of this graph")
        r, c = v
        vs = self.vertices
        return {u for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)) if u in vs}

    def is_connected(self) -> bool:
        """Whether the implicit-edge graph on the vertex set is connected."""
        if self._connected is None:
            vs = self.vertices
            start = next(iter(vs))
            seen = {start}
            stack = [start]
            while stack:
                r, c = stack.pop()
                for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                    if u in vs and u not in seen:
                        seen.add(u)
                        stack.append(u)
            self._connected = len(seen) == self.n
        return self._connected

    def boundary(self, subset: Iterable[Coord]) -> set[Coord]:
        """Members of ``subset`` with at least one graph neighbor outside it.

        ``subset`` must consist of vertices of the graph.
        """
        s = subset if isinstance(subset, (set, frozenset)) else set(subset)
        if not s <= self.vertices:
            raise NotASubsetError("boundary argument contains non-vertices")
        vs = self.vertices
        out = set()
        for v in s:
            r, c = v
            for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if u in vs and u not in s:
                    out.add(v)
                    break
        return out

    # -- area range queries ----------------------------------------------
    #
    # All ranges are half open on the small side: a column range (i, j]
    # excludes column i and includes column j, and likewise for rows.

    def _col_buckets(self) -> list[list[Coord]]:
        if self._cols is None:
            cols: list[list[Coord]] = [[] for _ in range(self.c_max + 2)]
            for v in self.vertices:
                cols[v[1]].append(v)
            self._cols = cols
        return self._cols

    def _row_buckets(self) -> list[list[Coord]]:
        if self._rows is None:
            rows: list[list[Coord]] = [[] for _ in range(self.r_max + 2)]
            for v in self.vertices:
                rows[v[0]].append(v)
            self._rows = rows
        return self._rows

    def _check_col(self, j: int) -> None:
        if not 0 <= j <= self.c_max + 1:
            raise IndexOutOfRangeError(f"column {j} outside [0, {self.c_max + 1}]")

    def _check_row(self, k: int) -> None:
        if not 0 <= k <= self.r_max + 1:
            raise IndexOutOfRangeError(f"row {k} outside [0, {self.r_max + 1}]")

    def area_column(self, j: int) -> set[Coord]:
        """All vertices in column ``j``."""
        self._check_col(j)
        return set(self._col_buckets()[j])

    def area_between(self, i: int, j: int) -> set[Coord]:
        """All vertices in columns ``i+1 .. j``."""
        self._check_col(i)
        self._check_col(j)
        if i > j:
            raise IndexOutOfRangeError(f"empty-crossing column range ({i}, {j}]")
        cols = self._col_buckets()
        out: set[Coord] = set()
        for t in range(i + 1, j + 1):
            out.update(cols[t])
        return out

    def area_row(self, i: int, j: int, k: int) -> set[Coord]:
        """Vertices in row ``k`` whose column lies in ``i+1 .. j``."""
        self._check_col(i)
        self._check_col(j)
        self._check_row(k)
        if i > j:
            raise IndexOutOfRangeError(f"empty-crossing column range ({i}, {j}]")
        return {v for v in self._row_buckets()[k] if i < v[1] <= j}

    def area_col_range(self, i: int, k: int, l: int) -> set[Coord]:
        """Vertices in column ``i`` whose row lies in ``k+1 .. l``."""
        self._check_col(i)
        self._check_row(k)
        self._check_row(l)
        if k > l:
            raise IndexOutOfRangeError(f"empty-crossing row range ({k}, {l}]")
        return {v for v in self._col_buckets()[i] if k < v[0] <= l}

    def area_rect(self, i: int, j: int, k: int, l: int) -> set[Coord]:
        """Vertices with column in ``i+1 .. j`` and row in ``k+1 .. l``."""
        self._check_col(i)
        self._check_col(j)
        self._check_row(k)
        self._check_row(l)
        if i > j or k > l:
            raise IndexOutOfRangeError("empty-crossing range")
        # scan whichever side holds fewer vertices; the filter is the same
        cols = self._col_buckets()
        rows = self._row_buckets()
        col_total = sum(len(cols[t]) for t in range(i + 1, j + 1))
        row_total = sum(len(rows[t]) for t in range(k + 1, l + 1))
        out: set[Coord] = set()
        if col_total <= row_total:
            for t in range(i + 1, j + 1):
                out.update(v for v in cols[t] if k < v[0] <= l)
        else:
            for t in range(k + 1, l + 1):
                out.update(v for v in rows[t] if i < v[1] <= j)
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"GridGraph(n={self.n}, r_max={self.r_max}, c_max={self.c_max})"


def normalize(raw: Iterable[Coord]) -> GridGraph:
    """Build a :class:`GridGraph` from raw coordinates.

    Duplicates collapse silently. Coordinates must be non-negative integers;
    the whole set is translated so the minimum occupied row and column are 1.
    Raises :class:`EmptyInputError` for an empty collection.

    The vertex tuples are rebuilt row by row over two shared index tables, so
    a million-vertex graph holds a few thousand distinct coordinate objects
    instead of two million, and row-ordered passes read memory in allocation
    order.
    """
    vs = frozenset((int(r), int(c)) for r, c in raw)
    if not vs:
        raise EmptyInputError("no vertices given")
    for r, c in vs:
        if r < 0 or c < 0:
            raise ValueError(f"negative coordinate ({r}, {c})")
    dr = min(v[0] for v in vs) - 1
    dc = min(v[1] for v in vs) - 1
    r_hi = max(v[0] for v in vs) - dr
    c_hi = max(v[1] for v in vs) - dc
    rows = list(range(r_hi + 1))
    cols = list(range(c_hi + 1))
    by_row: list[list[int]] = [[] for _ in range(r_hi + 1)]
    for r, c in vs:
        by_row[r - dr].append(c - dc)
    out: list[Coord] = []
    for r, cs in enumerate(by_row):
        rt = rows[r]
        out.extend((rt, cols[c]) for c in cs)
    return GridGraph(frozenset(out))


def components(g: GridGraph) -> list[GridGraph]:
    """Connected components of ``g``, each renormalized.

    Ordered by their smallest vertex in (row, col) order.
    """
    remaining = set(g.vertices)
    comps: list[frozenset[Coord]] = []
    while remaining:
        start = min(remaining)
        seen = {start}
        stack = [start]
        while stack:
            r, c = stack.pop()
            for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if u in remaining and u not in seen:
                    seen.add(u)
                    stack.append(u)
        remaining -= seen
        comps.append(frozenset(seen))
    comps.sort(key=min)
    return [normalize(c) for c in comps]
