"""Shared fixtures: exhaustive small-instance spaces and common graphs."""

import pytest

from gridcarve.grid import GridGraph, normalize

_BOX = [(r, c) for r in range(4) for c in range(4)]
_NBR = []
for _i, (_r, _c) in enumerate(_BOX):
    _m = 0
    for _j, (_r2, _c2) in enumerate(_BOX):
        if abs(_r - _r2) + abs(_c - _c2) == 1:
            _m |= 1 << _j
    _NBR.append(_m)


def _mask_connected(mask: int) -> bool:
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= _NBR[b.bit_length() - 1]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def enumerate_box4() -> list[GridGraph]:
    """Every connected grid graph whose vertices fit a 4x4 bounding box.

    All 2^16 - 1 nonempty subsets are tested for connectivity by bitmask
    flood fill; translates collapse to one normalized representative.
    """
    out: dict[frozenset, GridGraph] = {}
    for mask in range(1, 1 << 16):
        if not _mask_connected(mask):
            continue
        g = normalize(_BOX[i] for i in range(16) if mask >> i & 1)
        key = frozenset(g.vertices)
        if key not in out:
            out[key] = g
    return list(out.values())


@pytest.fixture(scope="session")
def box4_graphs() -> list[GridGraph]:
    graphs = enumerate_box4()
    assert len(graphs) == 9472
    return graphs


@pytest.fixture(scope="session")
def full9() -> GridGraph:
    return normalize([(r, c) for r in range(9) for c in range(9)])


@pytest.fixture(scope="session")
def full3() -> GridGraph:
    return normalize([(r, c) for r in range(3) for c in range(3)])


@pytest.fixture(scope="session")
def full2() -> GridGraph:
    return normalize([(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture(scope="session")
def path3() -> GridGraph:
    return normalize([(1, 1), (1, 2), (1, 3)])


@pytest.fixture(scope="session")
def single() -> GridGraph:
    return normalize([(1, 1)])
