"""Deterministic generators of connected grid graphs for tests and benchmarks."""

from __future__ import annotations

import random
from math import isqrt

from .grid import Coord

SHAPES = ("walk", "blob", "full", "path")

_STEPS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def walk(target_n: int, seed: int) -> list[Coord]:
    """Lattice random walk; every visited cell becomes a vertex.

    The walk backtracks freely, so the trace is connected by construction.
    """
    _require_positive(target_n)
    rng = random.Random(seed)
    r, c = 0, 0
    cells = {(0, 0)}
    randrange = rng.randrange
    while len(cells) < target_n:
        dr, dc = _STEPS[randrange(4)]
        r += dr
        c += dc
        cells.add((r, c))
    return _shift(cells)


def blob(target_n: int, seed: int) -> list[Coord]:
    """Randomized breadth-first carving of a box: grow from the center by
    repeatedly claiming a uniformly random frontier cell."""
    _require_positive(target_n)
    rng = random.Random(seed)
    side = isqrt((target_n * 5) // 3) + 1  # box capacity ~1.67x the target
    start = (side // 2, side // 2)
    chosen = {start}
    touched = {start}
    frontier: list[Coord] = []

    def push(cell: Coord) -> None:
        r, c = cell
        if 0 <= r < side and 0 <= c < side and cell not in touched:
            touched.add(cell)
            frontier.append(cell)

    for d in _STEPS:
        push((start[0] + d[0], start[1] + d[1]))
    randrange = rng.randrange
    while len(chosen) < target_n:
        i = randrange(len(frontier))
        frontier[i], frontier[-1] = frontier[-1], frontier[i]
        cell = frontier.pop()
        chosen.add(cell)
        r, c = cell
        push((r - 1, c))
        push((r + 1, c))
        push((r, c - 1))
        push((r, c + 1))
    return _shift(chosen)


def full(target_n: int, seed: int = 0) -> list[Coord]:
    """A ceil(sqrt(n))-sided square filled row-major up to exactly n cells."""
    _require_positive(target_n)
    side = isqrt(target_n - 1) + 1
    out = []
    for r in range(1, side + 1):
        for c in range(1, side + 1):
            out.append((r, c))
            if len(out) == target_n:
                return out
    return out


def path(target_n: int, seed: int = 0) -> list[Coord]:
    """A single horizontal row of n cells."""
    _require_positive(target_n)
    return [(1, c) for c in range(1, target_n + 1)]


def generate(shape: str, target_n: int, seed: int) -> list[Coord]:
    """Dispatch on shape name; returns normalized coordinates."""
    if shape == "walk":
        return walk(target_n, seed)
    if shape == "blob":
        return blob(target_n, seed)
    if shape == "full":
        return full(target_n, seed)
    if shape == "path":
        return path(target_n, seed)
    raise ValueError(f"unknown shape {shape!r}; expected one of {SHAPES}")


def _require_positive(target_n: int) -> None:
    if target_n < 1:
        raise ValueError("target_n must be at least 1")


def _shift(cells: set[Coord]) -> list[Coord]:
    r_min = min(v[0] for v in cells)
    c_min = min(v[1] for v in cells)
    dr, dc = 1 - r_min, 1 - c_min
    return [(r + dr, c + dc) for r, c in cells]
