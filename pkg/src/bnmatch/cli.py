"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 parse/read error,
3 input validation error (the message names the violated invariant),
4 size guard (oracle refuses n > 20).
"""
from __future__ import annotations

import argparse
import math
import statistics
import sys
import time

import numpy as np

from . import baselines, formats, generators, render, solver, structure
from .errors import BnmatchError, TooLargeError
from .geometry import ConvexPointSet, validate_convex_ccw

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_VALIDATE = 3
EXIT_SIZE = 4


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _sort_ccw(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def _load_instance(args) -> ConvexPointSet:
    points = formats.parse_instance(_read(args.instance))
    if getattr(args, "sort_ccw", False):
        points = _sort_ccw(points)
    return validate_convex_ccw(points)


def _structure_label(cascades: int) -> str:
    return (
        solver.STRUCTURE_THREE_CASCADE
        if cascades >= 3
        else solver.STRUCTURE_ONE_CASCADE
    )


def cmd_solve(args) -> int:
    P = _load_instance(args)
    rep = solver.solve(P)
    _write(
        args.output,
        formats.matching_to_json(
            P.n, rep.value, rep.matching.pairs, rep.structure,
            rep.cascades, rep.candidate_count,
        ),
    )
    return EXIT_OK


def cmd_baseline(args) -> int:
    P = _load_instance(args)
    value, matching = baselines.cubic_solve(P)
    decomp = structure.cascade_decomposition(P, matching)
    _write(
        args.output,
        formats.matching_to_json(
            P.n, value, matching.pairs,
            _structure_label(decomp.cascade_count), decomp.cascade_count, None,
        ),
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    P = _load_instance(args)
    value, optimal = baselines.oracle_solve(P)
    matching = optimal[0]
    decomp = structure.cascade_decomposition(P, matching)
    _write(
        args.output,
        formats.matching_to_json(
            P.n, value, matching.pairs,
            _structure_label(decomp.cascade_count), decomp.cascade_count, None,
        ),
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _load_instance(args)
    md = formats.parse_matching(_read(args.matching))

    def fail(check: str) -> int:
        print(f"FAIL {check}")
        return EXIT_VERIFY

    if md["n"] != P.n:
        return fail("n")
    matching = structure.Matching.of(P.n, md["pairs"])
    rep = structure.verify_matching(P, matching)
    if not rep.perfect:
        return fail("perfect")
    if not rep.non_crossing:
        return fail("nonCrossing")
    if abs(md["value"] - rep.value) > 1e-9 * abs(rep.value):
        return fail("value")
    decomp = structure.cascade_decomposition(P, matching)
    print(
        f"OK perfect nonCrossing value={formats.fmt17(rep.value)} "
        f"cascades={decomp.cascade_count} "
        f"threeBounded={decomp.three_bounded_count}"
    )
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = generators.GenSpec(args.n, args.mode, args.seed, args.spread)
    P = generators.generate(spec)
    coords = P.coords()
    if args.format == "csv":
        _write(args.output, formats.instance_to_csv(coords))
    else:
        _write(args.output, formats.instance_to_json(coords))
    return EXIT_OK


def cmd_render(args) -> int:
    points = formats.parse_instance(_read(args.instance))
    md = formats.parse_matching(_read(args.matching))
    if not md["pairs"]:
        raise formats.ParseError("matching file has no pairs")
    svg = render.render_svg(points, md["pairs"], md["value"])
    _write(args.out, svg)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if any(n % 2 for n in sizes):
        raise BnmatchError("bench sizes must be even")
    medians = []
    print("n,rep,seed,elapsed_ns,value")
    for n in sizes:
        cells = []
        for rep in range(args.reps):
            seed = args.seed + rep
            P = generators.generate(generators.GenSpec(n, args.mode, seed, args.spread))
            if args.algo == "cubic":
                t0 = time.perf_counter_ns()
                value, _ = baselines.cubic_solve(P)
                dt = time.perf_counter_ns() - t0
            else:
                t0 = time.perf_counter_ns()
                value = solver.solve(P).value
                dt = time.perf_counter_ns() - t0
            cells.append(dt)
            print(f"{n},{rep},{seed},{dt},{formats.fmt17(value)}")
        medians.append(statistics.median(cells))
    if len(sizes) >= 2:
        slope = float(np.polyfit(np.log(sizes), np.log(medians), 1)[0])
        print(f"# slope {slope:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bnmatch",
        description="Bottleneck non-crossing matchings of points in convex position.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_instance(p):
        p.add_argument("instance", help="instance file (JSON points or CSV x,y lines)")
        p.add_argument("--sort-ccw", action="store_true",
                       help="sort input points ccw around their centroid first")

    p = sub.add_parser("solve", help="quadratic solver")
    add_instance(p)
    p.add_argument("--output", help="matching JSON path (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("baseline", help="cubic dynamic-programming baseline")
    add_instance(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("oracle", help="exhaustive oracle (n <= 20)")
    add_instance(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a matching file against an instance")
    add_instance(p)
    p.add_argument("matching", help="matching JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=generators.MODES, default="circle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spread", type=float, default=0.05)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="render instance + matching to SVG")
    p.add_argument("instance")
    p.add_argument("matching")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="timing harness, CSV to stdout")
    p.add_argument("--sizes", required=True, help="comma-separated even sizes")
    p.add_argument("--mode", choices=generators.MODES, default="circle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spread", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--algo", choices=("solve", "cubic"), default="solve")
    p.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeError as e:
        print(str(e), file=sys.stderr)
        return EXIT_SIZE
    except BnmatchError as e:
        print(str(e), file=sys.stderr)
        return EXIT_VALIDATE
    except ValueError as e:  # e.g. out-of-range generator parameters
        print(str(e), file=sys.stderr)
        return EXIT_VALIDATE


if __name__ == "__main__":
    sys.exit(main())
