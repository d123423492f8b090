"""Command-line interface: ``acutetour {tour,verify,oracle,gen,bench}``.

Exit codes: 0 success, 1 invalid input or a failed verification, 2 size
outside what the command supports, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import io
from .bench import bench_size
from .errors import InternalInvariantError, InvalidInputError, UnsupportedSizeError
from .generate import DISTRIBUTIONS, generate_array
from .oracle import exhaustive_min_max_tour
from .partition import equitable_partition
from .svg import render_svg
from .tour import build_tour, validate_tour_input
from .verify import verify_tour

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SIZE = 2
EXIT_INTERNAL = 3


def _err(msg: str) -> None:
    print(f"acutetour: {msg}", file=sys.stderr)


def cmd_tour(args) -> int:
    try:
        pts = io.read_points(args.input, args.k)
        validate_tour_input(pts)
    except UnsupportedSizeError as exc:
        _err(str(exc))
        return EXIT_SIZE
    except (InvalidInputError, OSError) as exc:
        _err(str(exc))
        return EXIT_INVALID
    try:
        t0 = time.perf_counter()
        part = equitable_partition(pts)
        t1 = time.perf_counter()
        tour = build_tour(part)
        t2 = time.perf_counter()
    except InternalInvariantError as exc:
        _err(f"internal invariant failed: {exc}")
        print(json.dumps(exc.bundle, sort_keys=True, default=str), file=sys.stderr)
        return EXIT_INTERNAL
    io.write_document(args.output, io.result_document(tour, args.k))
    if args.svg:
        svg = render_svg(pts, tour.order, part.frame, title=f"n={len(pts)} {tour.case_taken}")
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    print(f"n={len(pts)} case={tour.case_taken} acute={str(tour.acute).lower()}")
    print(f"max_angle_rad={tour.max_angle:.6f}")
    print(f"t_partition={t1 - t0:.6f}s t_construct={t2 - t1:.6f}s")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        pts = io.read_points(args.input, args.k)
        order = io.read_order(args.tour)
        report = verify_tour(pts, order)
    except (InvalidInputError, OSError) as exc:
        _err(str(exc))
        return EXIT_INVALID
    if not report.is_permutation:
        print("not a permutation of the input points")
    for vertex, angle in report.violations:
        print(f"obtuse vertex {vertex}: {angle:.6f} rad")
    print(f"acute={str(report.acute).lower()} max_angle_rad={report.max_angle:.6f}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_oracle(args) -> int:
    try:
        pts = io.read_points(args.input, args.k)
    except (InvalidInputError, OSError) as exc:
        _err(str(exc))
        return EXIT_INVALID
    try:
        res = exhaustive_min_max_tour(pts)
    except InvalidInputError as exc:
        _err(str(exc))
        return EXIT_SIZE
    print(f"{res.min_max_angle:.4f}")
    print("order=" + ",".join(map(str, res.best_order)))
    print(f"acute_tour_exists={str(res.acute_tour_exists).lower()}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        arr = generate_array(args.n, args.distribution, args.seed)
        io.write_points(
            args.output, arr.tolist(), io.DEFAULT_SCALE_K,
            header=f"n={args.n} distribution={args.distribution} seed={args.seed}",
        )
    except (InvalidInputError, OSError) as exc:
        _err(str(exc))
        return EXIT_INVALID
    return EXIT_OK


def cmd_bench(args) -> int:
    if not args.sizes:
        _err("no sizes given")
        return EXIT_INVALID
    if args.repeats < 1:
        _err("--repeats must be at least 1")
        return EXIT_INVALID
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "t_partition", "t_construct"])
        for n in args.sizes:
            t = bench_size(n, args.repeats, args.distribution, args.seed)
            writer.writerow([t.n, f"{t.t_partition:.6f}", f"{t.t_construct:.6f}"])
            out.flush()
    except UnsupportedSizeError as exc:
        _err(str(exc))
        return EXIT_SIZE
    except InvalidInputError as exc:
        _err(str(exc))
        return EXIT_INVALID
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # Usage errors are bad parameters; exit 2 is reserved for size limits.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="acutetour", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scale(p):
        p.add_argument("-k", type=int, default=io.DEFAULT_SCALE_K,
                       help="decimal scale exponent for input coordinates (default %(default)s)")

    p = sub.add_parser("tour", help="construct an acute tour")
    p.add_argument("input", help="CSV of x,y points")
    p.add_argument("output", help="result document (JSON)")
    p.add_argument("--svg", help="also render the tour to this SVG file")
    scale(p)
    p.set_defaults(func=cmd_tour)

    p = sub.add_parser("verify", help="check a tour against its points")
    p.add_argument("input", help="CSV of x,y points")
    p.add_argument("tour", help="result document or whitespace/comma separated indices")
    scale(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive min-max angle tour for n <= 12")
    p.add_argument("input", help="CSV of x,y points")
    scale(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a seeded random point set")
    p.add_argument("n", type=int)
    p.add_argument("output")
    p.add_argument("--distribution", "-d", default="uniform", choices=DISTRIBUTIONS)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time partition and construction per size")
    p.add_argument("sizes", type=int, nargs="*")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--distribution", "-d", default="uniform", choices=DISTRIBUTIONS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", help="CSV file (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
