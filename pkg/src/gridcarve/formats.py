"""Grid text files and the JSON documents the command line emits.

All emitters are deterministic: cells and bags are sorted by (row, col), JSON
keys are sorted, and output ends with a newline, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from .cover import RclCover, RclRectangle
from .errors import GridParseError
from .grid import Coord, GridGraph, normalize
from .pathdecomp import PathDecomposition


def parse_grid_text(text: str) -> list[Coord]:
    """Parse 'row col' lines; '#' starts a comment, blank lines are skipped."""
    coords: list[Coord] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GridParseError(f"line {lineno}: expected 'row col', got {raw!r}")
        try:
            r, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise GridParseError(f"line {lineno}: non-integer coordinate in {raw!r}") from None
        if r < 0 or c < 0:
            raise GridParseError(f"line {lineno}: negative coordinate in {raw!r}")
        coords.append((r, c))
    return coords


def load_grid_text(text: str) -> GridGraph:
    coords = parse_grid_text(text)
    if not coords:
        raise GridParseError("grid file holds no vertices")
    return normalize(coords)


def emit_grid_text(g: GridGraph) -> str:
    lines = [f"{r} {c}" for r, c in sorted(g.vertices)]
    return "\n".join(lines) + "\n"


def cover_to_document(cover: RclCover) -> dict[str, Any]:
    return {
        "n": cover.n,
        "r_max": cover.r_max,
        "c_max": cover.c_max,
        "rectangles": [
            {
                "c1": r.c1,
                "c2": r.c2,
                "r1": r.r1,
                "r2": r.r2,
                "cells": [[vr, vc] for vr, vc in sorted(r.cell_set)],
            }
            for r in cover.rectangles
        ],
    }


def cover_from_document(doc: Any) -> RclCover:
    try:
        rects = tuple(
            RclRectangle(
                c1=int(r["c1"]),
                c2=int(r["c2"]),
                r1=int(r["r1"]),
                r2=int(r["r2"]),
                cell_set=frozenset((int(vr), int(vc)) for vr, vc in r["cells"]),
            )
            for r in doc["rectangles"]
        )
        return RclCover(rects, n=int(doc["n"]), r_max=int(doc["r_max"]), c_max=int(doc["c_max"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise GridParseError(f"malformed cover document: {exc}") from None


def pathdecomp_to_document(pd: PathDecomposition) -> dict[str, Any]:
    return {
        "width": pd.width(),
        "bags": [[[vr, vc] for vr, vc in sorted(bag)] for bag in pd.bags],
    }


def pathdecomp_from_document(doc: Any) -> PathDecomposition:
    try:
        bags = tuple(
            frozenset((int(vr), int(vc)) for vr, vc in bag) for bag in doc["bags"]
        )
        if not bags:
            raise GridParseError("path decomposition document holds no bags")
        return PathDecomposition(bags)
    except (KeyError, TypeError, ValueError) as exc:
        raise GridParseError(f"malformed path decomposition document: {exc}") from None


def report_to_document(reports) -> dict[str, Any]:
    """Merge one or more verification reports into a single document."""
    if not isinstance(reports, (list, tuple)):
        reports = [reports]
    violations = [v for rep in reports for v in rep.violations]
    return {
        "ok": not violations,
        "violations": [
            {"condition": v.condition, "index": v.index, "detail": v.detail}
            for v in violations
        ],
    }


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridParseError(f"invalid JSON: {exc}") from None
