"""Square-root gates, cut predicates, scanners, and the cover pipeline."""

from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridcarve.cover import (
    DebugAudit,
    NiceColumnPair,
    SqrtGate,
    almost_nice_column_check,
    almost_nice_row_check,
    attach_rows,
    compute_nice_columns,
    compute_rcl_cover,
    next_nice_column,
    next_nice_row,
    nice_column_check,
    nice_row_check,
    rows_for_pair,
)
from gridcarve.errors import NotConnectedError
from gridcarve.generate import generate
from gridcarve.grid import normalize
from gridcarve.sorting import AdvanceCounter, ScanCursor, build_sclv, build_srlv


class TestSqrtGate:
    def test_sqrt_ceil_examples(self):
        assert SqrtGate(1).sqrt_ceil == 1
        assert SqrtGate(2).sqrt_ceil == 2
        assert SqrtGate(4).sqrt_ceil == 2
        assert SqrtGate(81).sqrt_ceil == 9
        assert SqrtGate(82).sqrt_ceil == 10

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SqrtGate(0)

    @given(st.integers(1, 10**6), st.integers(0, 10**6), st.integers(1, 6))
    def test_gates_match_isqrt_oracle(self, n, c, m):
        # c <= m*sqrt(n) holds exactly when c <= floor(sqrt(m*m*n))
        gate = SqrtGate(n)
        bound = isqrt(m * m * n)
        assert gate.at_most(c, m) == (c <= bound)
        assert gate.exceeds(c, m) == (c > bound)
        assert gate.at_least_sqrt(c) == (c >= gate.sqrt_ceil)
        assert gate.below_sqrt(c) == (c < gate.sqrt_ceil)

    @given(st.integers(1, 10**6))
    def test_sqrt_ceil_is_smallest_square_reaching_n(self, n):
        s = SqrtGate(n).sqrt_ceil
        assert s * s >= n
        assert (s - 1) * (s - 1) < n


class TestCutPredicates:
    def test_nice_column_examples(self):
        assert nice_column_check(SqrtGate(81), 3, 21, 6)
        assert nice_column_check(SqrtGate(9), 3, 3, 1)
        assert not nice_column_check(SqrtGate(4), 3, 4, 1)

    def test_almost_nice_column_examples(self):
        gate = SqrtGate(81)
        # a nice column serves as its own witness with an empty tail
        assert almost_nice_column_check(gate, 3, 21, (3, 21, 6, 0))
        assert almost_nice_column_check(gate, 9, 81, (9, 73, 2, 8))
        # the tail bound is strict
        assert not almost_nice_column_check(gate, 3, 21, (3, 21, 6, 9))
        assert not almost_nice_column_check(gate, 3, 21, None)

    def test_nice_row_examples(self):
        gate = SqrtGate(81)
        assert nice_row_check(gate, 5, 11)
        assert not nice_row_check(gate, 5, 8)
        assert not nice_row_check(gate, 28, 11)

    def test_almost_nice_row_examples(self):
        gate = SqrtGate(81)
        assert almost_nice_row_check(gate, 5, 50)
        assert not almost_nice_row_check(gate, 5, 55)
        assert almost_nice_row_check(gate, 5, 11)

    @given(st.integers(1, 5000), st.integers(0, 300), st.integers(0, 5000))
    def test_nice_row_implies_almost_nice_row(self, n, row, between):
        gate = SqrtGate(n)
        if nice_row_check(gate, row, between):
            assert almost_nice_row_check(gate, row, between)


def _column_sizes(g):
    sizes = [0] * (g.c_max + 2)
    for _, c in g.vertices:
        sizes[c] += 1
    return sizes


class TestNextNiceColumn:
    def test_single_vertex_returns_sentinel(self, single):
        cur = ScanCursor(build_sclv(single))
        assert next_nice_column(SqrtGate(1), cur, 0, single.c_max) == 2

    def test_full_nine_returns_first_column(self, full9):
        cur = ScanCursor(build_sclv(full9))
        j = next_nice_column(SqrtGate(81), cur, 0, full9.c_max)
        assert j == 1
        assert cur.current() == (1, 2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 9, 10, 16, 17, 30])
    def test_horizontal_path(self, n):
        g = normalize([(1, c) for c in range(1, n + 1)])
        gate = SqrtGate(n)
        cur = ScanCursor(build_sclv(g))
        j = next_nice_column(gate, cur, 0, g.c_max)
        if n - gate.sqrt_ceil >= gate.sqrt_ceil:
            assert j == gate.sqrt_ceil
            assert cur.current() == (1, j + 1)
        else:
            assert j == g.c_max + 1

    def test_contract_on_random_graphs(self):
        # every non-sentinel return is an almost nice column with a large
        # suffix and the cursor parked one column past it
        for seed in range(15):
            g = normalize(generate("blob" if seed % 2 else "walk", 150, seed))
            gate = SqrtGate(g.n)
            sizes = _column_sizes(g)
            cur = ScanCursor(build_sclv(g))
            prev = 0
            while True:
                j = next_nice_column(gate, cur, prev, g.c_max)
                assert prev < j <= g.c_max + 1
                between = sum(sizes[prev + 1 : j + 1])
                assert gate.at_most(sizes[j])
                assert gate.at_least_sqrt(between)
                if j == g.c_max + 1:
                    break
                suffix = sum(sizes[j + 1 :])
                assert suffix >= gate.sqrt_ceil
                assert cur.current()[1] == j + 1
                prev = j


class TestNextNiceRow:
    def test_single_vertex_pair(self, single):
        pair = NiceColumnPair(0, 2)
        pair.area_by_row = build_srlv(single)
        cur = ScanCursor(pair.area_by_row)
        p = next_nice_row(SqrtGate(1), cur, 0, single.r_max, None, (0, 2))
        assert p == 2

    def test_one_column_band_of_nine(self, full9):
        # 9 vertices accumulate to sqrt(81) leaving an empty suffix, so the
        # sentinel row comes back
        pairs, cmap = compute_nice_columns(full9, build_sclv(full9))
        attach_rows(full9, build_srlv(full9), pairs, cmap)
        cur = ScanCursor(pairs[0].area_by_row)
        p = next_nice_row(SqrtGate(81), cur, 0, full9.r_max, None, (0, 1))
        assert p == full9.r_max + 1

    def test_whole_grid_band_cuts_each_row(self, full9):
        pair = NiceColumnPair(0, 10)
        pair.area_by_row = build_srlv(full9)
        cur = ScanCursor(pair.area_by_row)
        p = next_nice_row(SqrtGate(81), cur, 0, full9.r_max, None, (0, 10))
        assert p == 1
        assert cur.current() == (2, 1)


class TestComputeNiceColumns:
    def test_single_vertex(self, single):
        pairs, cmap = compute_nice_columns(single, build_sclv(single))
        assert [(p.c1, p.c2) for p in pairs] == [(0, 2)]
        assert cmap[0] == -1
        assert cmap[1] == 0 and cmap[2] == 0

    def test_full_nine_chains_column_by_column(self, full9):
        pairs, cmap = compute_nice_columns(full9, build_sclv(full9))
        assert [(p.c1, p.c2) for p in pairs] == [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
            (5, 6), (6, 7), (7, 8), (8, 10),
        ]

    def test_disconnected_rejected(self):
        g = normalize([(1, 1), (1, 3)])
        with pytest.raises(NotConnectedError):
            compute_nice_columns(g, build_sclv(g))

    def test_chain_and_map_invariants(self):
        for seed in range(12):
            g = normalize(generate("walk" if seed % 2 else "blob", 90, seed))
            pairs, cmap = compute_nice_columns(g, build_sclv(g))
            assert pairs[0].c1 == 0
            assert pairs[-1].c2 == g.c_max + 1
            for a, b in zip(pairs, pairs[1:]):
                assert a.c2 == b.c1
            for j in range(1, g.c_max + 2):
                t = cmap[j]
                assert pairs[t].c1 < j <= pairs[t].c2


class TestAttachRows:
    def test_single_vertex(self, single):
        pairs, cmap = compute_nice_columns(single, build_sclv(single))
        attach_rows(single, build_srlv(single), pairs, cmap)
        assert pairs[0].area_by_row.entries == [(1, 1)]

    def test_full_square_two_bands(self, full2):
        # sqrt_ceil(4) = 2, so column 1 alone fills a band and the scanner
        # keeps the cut (two vertices remain to its right)
        pairs, cmap = compute_nice_columns(full2, build_sclv(full2))
        assert [(p.c1, p.c2) for p in pairs] == [(0, 1), (1, 3)]
        assert cmap == [-1, 0, 1, 1]
        attach_rows(full2, build_srlv(full2), pairs, cmap)
        assert pairs[0].area_by_row.entries == [(1, 1), (2, 1)]
        assert pairs[1].area_by_row.entries == [(1, 2), (2, 2)]

    def test_bands_are_filtered_row_sorts(self, full9):
        pairs, cmap = compute_nice_columns(full9, build_sclv(full9))
        attach_rows(full9, build_srlv(full9), pairs, cmap)
        for pair in pairs:
            expected = sorted(
                v for v in full9.vertices if pair.c1 < v[1] <= pair.c2
            )
            assert pair.area_by_row.entries == expected


class TestRowsForPair:
    def test_single_vertex(self, single):
        cover = compute_rcl_cover(single)
        assert [(r.c1, r.c2, r.r1, r.r2) for r in cover.rectangles] == [(0, 2, 0, 2)]
        assert cover.rectangles[0].cell_set == frozenset({(1, 1)})

    def test_one_column_band_is_one_rectangle(self, full9):
        pairs, cmap = compute_nice_columns(full9, build_sclv(full9))
        attach_rows(full9, build_srlv(full9), pairs, cmap)
        rects = rows_for_pair(SqrtGate(81), pairs[0], full9.r_max)
        assert [(r.c1, r.c2, r.r1, r.r2) for r in rects] == [(0, 1, 0, 10)]
        assert rects[0].cell_set == frozenset(full9.area_column(1))

    def test_row_chain_invariants(self):
        for seed in range(10):
            g = normalize(generate("blob", 200, seed))
            cover = compute_rcl_cover(g)
            by_group: dict[tuple, list] = {}
            for r in cover.rectangles:
                by_group.setdefault((r.c1, r.c2), []).append(r)
            for rects in by_group.values():
                assert rects[0].r1 == 0
                assert rects[-1].r2 == g.r_max + 1
                for a, b in zip(rects, rects[1:]):
                    assert a.r2 == b.r1
                for r in rects:
                    assert r.cell_set == frozenset(
                        g.area_rect(r.c1, r.c2, r.r1, r.r2)
                    )


class TestComputeRclCover:
    def test_full_nine_is_nine_columns(self, full9):
        cover = compute_rcl_cover(full9)
        assert len(cover.rectangles) == 9
        assert all(len(r.cell_set) == 9 for r in cover.rectangles)

    def test_cells_partition_the_vertex_set(self):
        for seed in range(10):
            g = normalize(generate("walk", 175, seed))
            cover = compute_rcl_cover(g)
            union = set()
            total = 0
            for r in cover.rectangles:
                union |= r.cell_set
                total += len(r.cell_set)
            assert union == g.vertices
            assert total == g.n

    def test_disconnected_rejected(self):
        with pytest.raises(NotConnectedError):
            compute_rcl_cover(normalize([(1, 1), (3, 3)]))

    def test_work_bound(self):
        # cursor advances stay within two full scans plus bounded lookahead
        for seed in range(10):
            for n in (1, 7, 50, 400, 2000):
                g = normalize(generate("blob", n, seed))
                counter = AdvanceCounter()
                cover = compute_rcl_cover(g, counter=counter)
                k = len(cover.rectangles)
                gate = SqrtGate(g.n)
                assert counter.count <= 2 * g.n + 2 * k * gate.sqrt_ceil

    def test_audit_passes_and_is_not_vacuous(self):
        for seed in range(6):
            g = normalize(generate("walk", 130, seed))
            audit = DebugAudit(g)
            compute_rcl_cover(g, audit=audit)
            assert audit.checks > 0

    def test_env_var_enables_audit(self, monkeypatch, full2):
        from gridcarve.cover import debug_asserts_enabled

        monkeypatch.setenv("GRIDCARVE_DEBUG_ASSERTS", "1")
        assert debug_asserts_enabled()
        compute_rcl_cover(full2)
        monkeypatch.setenv("GRIDCARVE_DEBUG_ASSERTS", "0")
        assert not debug_asserts_enabled()
