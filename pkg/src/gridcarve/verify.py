"""Independent brute-force verifiers for covers and path decompositions.

Everything here re-derives its facts from the graph's naive area and
neighbor queries; nothing trusts counts maintained by the pipeline. Each
check failure is reported as a violation tagged with a stable condition
identifier so tests and tools can match on exactly what broke.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

from .cover import (
    RclCover,
    RclRectangle,
    SqrtGate,
    almost_nice_column_check,
    almost_nice_row_check,
)
from .grid import Coord, GridGraph
from .pathdecomp import PathDecomposition

RCL_1 = "RCL.1"
RCL_2 = "RCL.2"
RCL_3 = "RCL.3"
RCL_4 = "RCL.4"
RCL_CELLS = "RCL.CELLS"
RCL_DISJOINT = "RCL.DISJOINT"
NICE_1 = "NICE.1"
NICE_2 = "NICE.2"
NICE_3 = "NICE.3"
NICE_4 = "NICE.4"
PATH_1 = "PATH.1"
PATH_2 = "PATH.2"
PATH_WIDTH = "PATH.WIDTH"
PAIR_COL = "PAIR.COL"
PAIR_ROW = "PAIR.ROW"


@dataclass(frozen=True)
class Violation:
    condition: str
    index: int | None
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...]
    width: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}


def _rectangles(cover: RclCover | Sequence[RclRectangle]) -> tuple[RclRectangle, ...]:
    if isinstance(cover, RclCover):
        return cover.rectangles
    return tuple(cover)


def verify_rcl_cover(g: GridGraph, cover: RclCover | Sequence[RclRectangle]) -> VerificationReport:
    """Check the four cover conditions plus stored-cell fidelity.

    Conditions, each with its own identifier:
      RCL.1 every rectangle has positive extent inside the super rectangle;
      RCL.2 for i < j: equal c1 forces equal c2 and stacked rows, otherwise
            rectangle j starts at or right of rectangle i's end column;
      RCL.3 some increasing subsequence chains columns from 0 to c_max+1;
      RCL.4 every rectangle sits in a consecutive run chaining rows from 0
            to r_max+1 within its column group.
    Additionally RCL.CELLS (stored cell set equals the area it claims) and
    RCL.DISJOINT (no vertex in two cell sets).
    """
    rects = _rectangles(cover)
    out: list[Violation] = []
    c_hi = g.c_max + 1
    r_hi = g.r_max + 1
    k = len(rects)
    derivable = [True] * k
    for i, r in enumerate(rects):
        in_range = 0 <= r.c1 <= c_hi and 0 <= r.c2 <= c_hi and 0 <= r.r1 <= r_hi and 0 <= r.r2 <= r_hi
        if not in_range or r.c2 <= r.c1 or r.r2 <= r.r1:
            out.append(Violation(RCL_1, i, f"extents ({r.c1},{r.c2},{r.r1},{r.r2}) degenerate or out of range"))
            derivable[i] = in_range and r.c1 <= r.c2 and r.r1 <= r.r2
    for i in range(k):
        a = rects[i]
        for j in range(i + 1, k):
            b = rects[j]
            if a.c1 == b.c1:
                if a.c2 != b.c2:
                    out.append(Violation(RCL_2, j, f"rectangles {i},{j} share c1={a.c1} but close at {a.c2} vs {b.c2}"))
                elif b.r1 < a.r2:
                    out.append(Violation(RCL_2, j, f"rectangle {j} overlaps rows of earlier rectangle {i} in the same group"))
            elif b.c1 < a.c2:
                out.append(Violation(RCL_2, j, f"rectangle {j} starts at column {b.c1}, left of rectangle {i}'s end {a.c2}"))
    reached = {0}
    for r in rects:
        if r.c1 in reached:
            reached.add(r.c2)
    if c_hi not in reached:
        out.append(Violation(RCL_3, None, f"no increasing rectangle chain spans columns 0 to {c_hi}"))
    # row chains: split the sequence at every broken r1/r2 handover, then a
    # rectangle is fine iff its chain segment holds a same-c1 opener (r1=0)
    # no later than it and a same-c1 closer (r2=r_max+1) no earlier than it
    seg = [0] * k
    for m in range(1, k):
        seg[m] = seg[m - 1] + (0 if rects[m].r1 == rects[m - 1].r2 else 1)
    openers: dict[tuple[int, int], int] = {}
    closers: dict[tuple[int, int], int] = {}
    for i, r in enumerate(rects):
        key = (seg[i], r.c1)
        if r.r1 == 0 and key not in openers:
            openers[key] = i
        if r.r2 == r_hi:
            closers[key] = i
    for i, r in enumerate(rects):
        key = (seg[i], r.c1)
        if openers.get(key, k) > i or closers.get(key, -1) < i:
            out.append(Violation(RCL_4, i, f"rectangle {i} is not inside a row chain from 0 to {r_hi} for c1={r.c1}"))
    seen: set[Coord] = set()
    duplicated = 0
    for i, r in enumerate(rects):
        if derivable[i]:
            derived = frozenset(g.area_rect(r.c1, r.c2, r.r1, r.r2))
            if derived != r.cell_set:
                out.append(Violation(RCL_CELLS, i, f"stored cells differ from rectangle contents by {len(derived ^ r.cell_set)} vertices"))
        for v in r.cell_set:
            if v in seen:
                duplicated += 1
            else:
                seen.add(v)
    if duplicated:
        out.append(Violation(RCL_DISJOINT, None, f"{duplicated} cell memberships repeat across rectangles"))
    return VerificationReport(tuple(out))


def verify_nice_decomposition(g: GridGraph, parts: Sequence[Iterable[Coord]]) -> VerificationReport:
    """Check the four nice-decomposition conditions on an ordered partition.

      NICE.1 every graph vertex is covered (and parts contain only vertices);
      NICE.2 parts are pairwise disjoint;
      NICE.3 sqrt(n) <= |part| <= 6 sqrt(n);
      NICE.4 every prefix union has boundary size <= 5 sqrt(n).

    The prefix boundary is maintained incrementally from raw coordinates:
    a newly added vertex joins the boundary if some neighbor is still
    outside, and an old boundary vertex is re-examined whenever a neighbor
    of it is added.
    """
    gate = SqrtGate(g.n)
    vs = g.vertices
    out: list[Violation] = []
    seen: set[Coord] = set()
    prefix: set[Coord] = set()
    boundary: set[Coord] = set()
    for i, part in enumerate(parts):
        p = set(part)
        foreign = len(p - vs)
        if foreign:
            out.append(Violation(NICE_1, i, f"part {i} holds {foreign} non-vertices"))
            p &= vs
        size = len(p) + foreign
        if not (gate.at_least_sqrt(size) and gate.at_most(size, 6)):
            out.append(Violation(NICE_3, i, f"|part {i}| = {size} outside [sqrt(n), 6 sqrt(n)] for n = {g.n}"))
        overlap = len(p & seen)
        if overlap:
            out.append(Violation(NICE_2, i, f"part {i} repeats {overlap} vertices of earlier parts"))
        seen |= p
        prefix |= p
        for v in p:
            r, c = v
            for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if u in vs and u not in prefix:
                    boundary.add(v)
                    break
            else:
                boundary.discard(v)
            for u in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if u in boundary:
                    rr, cc = u
                    for w in ((rr - 1, cc), (rr + 1, cc), (rr, cc - 1), (rr, cc + 1)):
                        if w in vs and w not in prefix:
                            break
                    else:
                        boundary.discard(u)
        b = len(boundary)
        if not gate.at_most(b, 5):
            out.append(Violation(NICE_4, i, f"prefix {i} has boundary {b} > 5 sqrt(n) for n = {g.n}"))
    missing = len(vs) - len(seen)
    if missing:
        example = next(iter(vs - seen))
        out.append(Violation(NICE_1, None, f"{missing} vertices uncovered, e.g. {example}"))
    return VerificationReport(tuple(out))


def verify_path_decomposition(g: GridGraph, pd: PathDecomposition) -> VerificationReport:
    """Check the path-decomposition conditions and report the width.

      PATH.1 every vertex appears in a non-empty contiguous run of bags
             (and bags contain only graph vertices);
      PATH.2 both ends of every implicit edge share some bag.
    """
    bags = pd.bags
    vs = g.vertices
    out: list[Violation] = []
    first: dict[Coord, int] = {}
    last: dict[Coord, int] = {}
    count: dict[Coord, int] = {}
    for bi, bag in enumerate(bags):
        if not bag <= vs:
            foreign = len(set(bag) - vs)
            out.append(Violation(PATH_1, bi, f"bag {bi} holds {foreign} non-vertices"))
        for v in bag:
            if v not in first:
                first[v] = bi
                count[v] = 0
            last[v] = bi
            count[v] += 1
    contiguous: dict[Coord, bool] = {}
    for v in vs:
        if v not in first:
            out.append(Violation(PATH_1, None, f"vertex {v} appears in no bag"))
            contiguous[v] = False
        else:
            ok = last[v] - first[v] + 1 == count[v]
            contiguous[v] = ok
            if not ok:
                out.append(Violation(PATH_1, None, f"vertex {v} appears in a non-contiguous set of bags"))
    for v in vs:
        r, c = v
        for u in ((r + 1, c), (r, c + 1)):
            if u not in vs or v not in first or u not in first:
                continue
            lo = max(first[v], first[u])
            hi = min(last[v], last[u])
            if lo > hi:
                covered = False
            elif contiguous[v] and contiguous[u]:
                covered = True
            else:
                covered = any(v in bags[t] and u in bags[t] for t in range(lo, hi + 1))
            if not covered:
                out.append(Violation(PATH_2, None, f"edge {v}-{u} is in no bag"))
    w = max((len(b) for b in bags), default=0) - 1 if bags else None
    return VerificationReport(tuple(out), width=w)


def verify_width_bound(g: GridGraph, pd: PathDecomposition) -> VerificationReport:
    """Check the pipeline's bag-size promise: |bag| <= 11 sqrt(n) per bag."""
    out: list[Violation] = []
    n = g.n
    for bi, bag in enumerate(pd.bags):
        if len(bag) ** 2 > 121 * n:
            out.append(Violation(PATH_WIDTH, bi, f"|bag {bi}| = {len(bag)} exceeds 11 sqrt({n})"))
    w = max((len(b) for b in pd.bags), default=0) - 1 if pd.bags else None
    return VerificationReport(tuple(out), width=w)


def verify_pair_predicates(g: GridGraph, cover: RclCover | Sequence[RclRectangle]) -> VerificationReport:
    """Re-derive and check the scanner's promises about its cuts.

      PAIR.COL each column group (c1, c2) is an almost nice column pair:
               small closing column, band of at least sqrt(n) vertices, and an
               exhaustively searched inner nice-column witness with a short tail;
      PAIR.ROW each rectangle's closing row and row band satisfy the almost
               nice row inequalities.
    """
    rects = _rectangles(cover)
    gate = SqrtGate(g.n)
    sizes = [len(g.area_column(t)) for t in range(g.c_max + 2)]
    psum = [0, *accumulate(sizes)]  # psum[t] = vertices in columns < t

    def between(a: int, b: int) -> int:
        return psum[b + 1] - psum[a + 1]

    out: list[Violation] = []
    seen_groups: dict[tuple[int, int], int] = {}
    for gi, r in enumerate(rects):
        key = (r.c1, r.c2)
        if key in seen_groups:
            continue
        seen_groups[key] = gi
        c1, c2 = key
        if not 0 <= c1 < c2 <= g.c_max + 1:
            out.append(Violation(PAIR_COL, gi, f"column pair ({c1}, {c2}] is malformed"))
            continue
        witness = None
        for kcol in range(c1 + 1, c2 + 1):
            cand = (sizes[kcol], between(c1, kcol), kcol - c1, between(kcol, c2))
            if (
                gate.at_most(cand[0])
                and gate.at_least_sqrt(cand[1])
                and gate.at_most(cand[2], 2)
                and gate.below_sqrt(cand[3])
            ):
                witness = cand
                break
        if not almost_nice_column_check(gate, sizes[c2], between(c1, c2), witness):
            out.append(Violation(PAIR_COL, gi, f"column pair ({c1}, {c2}] is not almost nice"))
    for ri, r in enumerate(rects):
        if not (
            0 <= r.c1 < r.c2 <= g.c_max + 1 and 0 <= r.r1 < r.r2 <= g.r_max + 1
        ):
            out.append(Violation(PAIR_ROW, ri, f"rectangle {ri} extents are malformed"))
            continue
        row_size = len(g.area_row(r.c1, r.c2, r.r2))
        band = len(g.area_rect(r.c1, r.c2, r.r1, r.r2))
        if not almost_nice_row_check(gate, row_size, band):
            out.append(Violation(PAIR_ROW, ri, f"rows ({r.r1}, {r.r2}] of band ({r.c1}, {r.c2}] are not almost nice"))
    return VerificationReport(tuple(out))
