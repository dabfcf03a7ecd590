"""Scikit-learn style estimators wrapping the cover pipeline.

Both estimators take X as an array of shape (n_vertices, 2) holding
(row, col) coordinates with non-negative integer values.  Duplicate rows
are allowed and collapse to one vertex.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_array

from .cover import compute_rcl_cover
from .errors import EmptyInputError
from .grid import normalize
from .pathdecomp import build_path_decomposition
from .verify import (
    verify_nice_decomposition,
    verify_pair_predicates,
    verify_path_decomposition,
    verify_rcl_cover,
)


def _validate_coords(X) -> np.ndarray:
    X = check_array(X, dtype="numeric", ensure_2d=True, ensure_min_samples=1)
    if X.shape[1] != 2:
        raise ValueError(f"X must have exactly 2 columns (row, col), got {X.shape[1]}")
    if np.any(X < 0):
        raise ValueError("coordinates must be non-negative")
    as_int = X.astype(np.int64)
    if np.any(as_int != X):
        raise ValueError("coordinates must be integers")
    return as_int


def _fit_common(X, verify: bool):
    coords = _validate_coords(X)
    raw = [(int(r), int(c)) for r, c in coords]
    if not raw:
        raise EmptyInputError("X holds no coordinates")
    r_min = min(r for r, _ in raw)
    c_min = min(c for _, c in raw)
    offset = (1 - r_min, 1 - c_min)
    graph = normalize(raw)
    cover = compute_rcl_cover(graph)  # raises NotConnectedError when split
    if verify:
        reports = [
            verify_rcl_cover(graph, cover),
            verify_nice_decomposition(graph, [r.cell_set for r in cover.rectangles]),
            verify_pair_predicates(graph, cover),
        ]
        bad = [v for rep in reports for v in rep.violations]
        if bad:
            raise AssertionError(f"self-check failed: {bad[0].condition}: {bad[0].detail}")
    return coords, offset, graph, cover


class RclCoverClusterer(ClusterMixin, BaseEstimator):
    """Partition grid-graph vertices into aligned rectangle cells.

    Each input vertex is labelled with the index of the rectangle whose
    cell set contains it.  The rectangle count grows as the square root
    of the vertex count, and every cell set is rectangle shaped after
    column alignment.

    Parameters
    ----------
    verify : bool, default=False
        Re-check the computed cover with the independent verifiers and
        raise AssertionError on any violation.

    Attributes
    ----------
    labels_ : ndarray of shape (n_samples,)
        Rectangle index per input row.
    rectangles_ : list of (c1, c2, r1, r2) tuples in input coordinates.
    cover_ : the underlying RclCover in normalized coordinates.
    graph_ : the normalized GridGraph.
    offset_ : (dr, dc) translation applied during normalization.
    n_clusters_ : number of rectangles.
    """

    def __init__(self, verify: bool = False):
        self.verify = verify

    def fit(self, X, y=None):
        coords, offset, graph, cover = _fit_common(X, self.verify)
        dr, dc = offset
        owner: dict[tuple[int, int], int] = {}
        for idx, rect in enumerate(cover.rectangles):
            for v in rect.cell_set:
                owner[v] = idx
        self.labels_ = np.array(
            [owner[(int(r) + dr, int(c) + dc)] for r, c in coords], dtype=np.int64
        )
        self.rectangles_ = [
            (r.c1 - dc, r.c2 - dc, r.r1 - dr, r.r2 - dr) for r in cover.rectangles
        ]
        self.cover_ = cover
        self.graph_ = graph
        self.offset_ = offset
        self.n_clusters_ = len(cover.rectangles)
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_


class PathDecomposer(BaseEstimator):
    """Compute a path decomposition of width O(sqrt(n)) for a grid graph.

    Attributes
    ----------
    bags_ : list of frozensets of (row, col) pairs in input coordinates.
    width_ : max bag size minus one.
    cover_ : the intermediate RclCover in normalized coordinates.
    graph_ : the normalized GridGraph.
    offset_ : (dr, dc) translation applied during normalization.
    """

    def __init__(self, verify: bool = False):
        self.verify = verify

    def fit(self, X, y=None):
        _, offset, graph, cover = _fit_common(X, self.verify)
        decomp = build_path_decomposition(graph, cover)
        if self.verify:
            rep = verify_path_decomposition(graph, decomp)
            if rep.violations:
                v = rep.violations[0]
                raise AssertionError(f"self-check failed: {v.condition}: {v.detail}")
        dr, dc = offset
        self.bags_ = [
            frozenset((r - dr, c - dc) for r, c in bag) for bag in decomp.bags
        ]
        self.width_ = decomp.width()
        self.cover_ = cover
        self.graph_ = graph
        self.offset_ = offset
        return self

    def fit_transform(self, X, y=None):
        """Fit and return the list of bags in input coordinates."""
        return self.fit(X).bags_
