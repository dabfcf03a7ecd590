"""Command line interface: gen, decompose, pathdecomp, verify, bench.

Exit codes: 0 success, 2 parse error, 3 input not connected, 4 verification
failed, 64 bad arguments.
"""

from __future__ import annotations

import argparse
import gc
import sys
import time
from pathlib import Path
from statistics import median

from .cover import compute_rcl_cover
from .errors import (
    BadArgumentsError,
    EmptyInputError,
    GridParseError,
    NotConnectedError,
)
from .formats import (
    cover_from_document,
    cover_to_document,
    dump_json,
    emit_grid_text,
    load_grid_text,
    load_json,
    pathdecomp_from_document,
    pathdecomp_to_document,
    report_to_document,
)
from .generate import SHAPES, generate
from .grid import GridGraph, components, normalize
from .pathdecomp import build_path_decomposition
from .svg import render_cover_svg
from .verify import (
    verify_nice_decomposition,
    verify_pair_predicates,
    verify_path_decomposition,
    verify_rcl_cover,
    verify_width_bound,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_CONNECTED = 3
EXIT_VERIFICATION = 4
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        raise BadArgumentsError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="gridcarve", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a connected grid graph file")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, required=True, help="number of vertices")
    g.add_argument("--shape", choices=SHAPES, default="blob")
    g.add_argument("--out", default="-")
    g.set_defaults(func=_cmd_gen)

    d = sub.add_parser("decompose", help="compute a rectangle cover")
    d.add_argument("input", help="grid file ('-' for stdin)")
    d.add_argument("--out", default="-")
    d.add_argument("--verify", action="store_true")
    d.add_argument("--svg", metavar="PATH")
    d.add_argument("--per-component", action="store_true")
    d.set_defaults(func=_cmd_decompose)

    pd = sub.add_parser("pathdecomp", help="compute a path decomposition")
    pd.add_argument("input", help="grid file ('-' for stdin)")
    pd.add_argument("--out", default="-")
    pd.add_argument("--verify", action="store_true")
    pd.add_argument("--per-component", action="store_true")
    pd.set_defaults(func=_cmd_pathdecomp)

    v = sub.add_parser("verify", help="verify documents against a grid file")
    v.add_argument("--graph", required=True)
    v.add_argument("--cover", metavar="PATH")
    v.add_argument("--pathdecomp", metavar="PATH")
    v.add_argument("--out", default="-")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bench", help="time the pipeline across sizes")
    b.add_argument("--sizes", default="100000,200000,400000,800000")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--shape", choices=SHAPES, default="blob")
    b.set_defaults(func=_cmd_bench)
    return p


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GridParseError(f"cannot read {path}: {exc}") from None


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_components(args) -> list[GridGraph]:
    g = load_grid_text(_read_input(args.input))
    if g.is_connected():
        return [g]
    if not args.per_component:
        raise NotConnectedError(
            "input graph is not connected (use --per-component to decompose each part)"
        )
    return components(g)


def _cmd_gen(args) -> int:
    if args.n < 1:
        raise BadArgumentsError("--n must be at least 1")
    g = normalize(generate(args.shape, args.n, args.seed))
    header = f"# gridcarve gen seed={args.seed} n={args.n} shape={args.shape}\n"
    _write_output(args.out, header + emit_grid_text(g))
    return EXIT_OK


def _verify_cover(g: GridGraph, cover) -> list:
    return [
        verify_rcl_cover(g, cover),
        verify_nice_decomposition(g, [r.cell_set for r in cover.rectangles]),
        verify_pair_predicates(g, cover),
    ]


def _fail_verification(reports) -> int:
    doc = report_to_document(reports)
    for v in doc["violations"]:
        print(f"violation {v['condition']} at {v['index']}: {v['detail']}", file=sys.stderr)
    return EXIT_VERIFICATION


def _cmd_decompose(args) -> int:
    if args.svg and args.per_component:
        raise BadArgumentsError("--svg cannot be combined with --per-component")
    graphs = _load_components(args)
    covers = [compute_rcl_cover(g) for g in graphs]
    if args.verify:
        reports = [rep for g, c in zip(graphs, covers) for rep in _verify_cover(g, c)]
        if any(not rep.ok for rep in reports):
            return _fail_verification(reports)
    if args.per_component:
        doc = [cover_to_document(c) for c in covers]
    else:
        doc = cover_to_document(covers[0])
    _write_output(args.out, dump_json(doc))
    if args.svg:
        Path(args.svg).write_text(render_cover_svg(graphs[0], covers[0]))
    return EXIT_OK


def _cmd_pathdecomp(args) -> int:
    graphs = _load_components(args)
    covers = [compute_rcl_cover(g) for g in graphs]
    decomps = [build_path_decomposition(g, c) for g, c in zip(graphs, covers)]
    if args.verify:
        reports = []
        for g, pd in zip(graphs, decomps):
            reports.append(verify_path_decomposition(g, pd))
            reports.append(verify_width_bound(g, pd))
        if any(not rep.ok for rep in reports):
            return _fail_verification(reports)
    if args.per_component:
        doc = [pathdecomp_to_document(pd) for pd in decomps]
    else:
        doc = pathdecomp_to_document(decomps[0])
    _write_output(args.out, dump_json(doc))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if not args.cover and not args.pathdecomp:
        raise BadArgumentsError("nothing to verify: pass --cover and/or --pathdecomp")
    g = load_grid_text(_read_input(args.graph))
    reports = []
    if args.cover:
        cover = cover_from_document(load_json(_read_input(args.cover)))
        reports.extend(_verify_cover(g, cover))
    if args.pathdecomp:
        pd = pathdecomp_from_document(load_json(_read_input(args.pathdecomp)))
        reports.append(verify_path_decomposition(g, pd))
    doc = report_to_document(reports)
    _write_output(args.out, dump_json(doc))
    return EXIT_OK if doc["ok"] else EXIT_VERIFICATION


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise BadArgumentsError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise BadArgumentsError("--sizes must hold positive integers")
    if args.repeats < 1:
        raise BadArgumentsError("--repeats must be at least 1")
    print("size,median_seconds")
    for i, size in enumerate(sizes):
        g = normalize(generate(args.shape, size, args.seed + i))
        g.is_connected()  # validate before the clock starts
        times = []
        for _ in range(args.repeats):
            # timeit-style discipline: collector noise stays out of the sample
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                cover = compute_rcl_cover(g)
                build_path_decomposition(g, cover)
                times.append(time.perf_counter() - t0)
            finally:
                gc.enable()
        print(f"{size},{median(times):.6f}")
        sys.stdout.flush()
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BadArgumentsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GridParseError, EmptyInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONNECTED


def run() -> None:  # console entry point
    sys.exit(main())
