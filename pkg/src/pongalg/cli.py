"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 a verification check failed,
2 invalid input, 3 an internal invariant broke.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time

from . import asteroids, core
from .algebra import WeightBookkeepingError, diff, mu2
from .cache import generator_table
from .oracle.diagram import InvariantViolation
from .oracle.geometry import GenericityError
from .oracle.triangles import triangle_domain
from .polynomial import Element
from .serialize import (
    InvalidRecord,
    dumps,
    element_to_record,
    generator_to_record,
    loads,
    record_to_element,
    triangle_record,
)
from .verify import ORACLE_SUITES, Report, a_verify, verify_dga, verify_oracle

log = logging.getLogger("pongalg")

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3

PONG_SUITES = ["dga", *ORACLE_SUITES]
SUITES = [*PONG_SUITES, "asteroids", "all"]


class UsageError(ValueError):
    pass


def _check_params(algebra: str, m: int, k: int, max_disp: int) -> None:
    check = core.check_context if algebra == "pong" else asteroids.check_context
    try:
        check(m, k)
    except core.InvalidGenerator as exc:
        raise UsageError(str(exc)) from exc
    if max_disp < 0:
        raise UsageError("--max-disp must be non-negative")


def _read_json(path: str | None):
    if path is None or path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def cmd_gens(args) -> int:
    _check_params(args.algebra, args.m, args.k, args.max_disp)
    gens = generator_table(args.algebra, args.m, args.k, args.max_disp, args.cache)
    _emit([generator_to_record(g) for g in sorted(gens)])
    return EXIT_OK


def cmd_diff(args) -> int:
    el = record_to_element(_read_json(args.input), args.algebra)
    _emit(element_to_record(diff(el)))
    return EXIT_OK


def cmd_mul(args) -> int:
    if args.right is None:
        pair = _read_json(args.left)
        if not isinstance(pair, list) or len(pair) != 2:
            raise InvalidRecord("mul expects a JSON array of two elements on stdin")
        left, right = pair
    else:
        left, right = _read_json(args.left), _read_json(args.right)
    a = record_to_element(left, args.algebra)
    b = record_to_element(right, args.algebra)
    for x, y in ((a, b), (b, a)):
        for g in x.terms:
            for h in y.terms:
                if type(g) is not type(h) or (g.m, g.k) != (h.m, h.k):
                    raise InvalidRecord("operands live in different algebras")
    _emit(element_to_record(mu2(a, b)))
    return EXIT_OK


def _suites_for(args) -> list[str]:
    if args.suite == "all":
        return ["asteroids"] if args.algebra == "asteroids" else PONG_SUITES
    if args.suite == "asteroids":
        return ["asteroids"]
    if args.algebra == "asteroids":
        raise UsageError(f"suite {args.suite!r} applies to the pong algebra only")
    return [args.suite]


def cmd_verify(args) -> int:
    algebra = "asteroids" if args.suite == "asteroids" else args.algebra
    _check_params(algebra, args.m, args.k, args.max_disp)
    suites = _suites_for(args)
    gens = generator_table(algebra, args.m, args.k, args.max_disp, args.cache)
    reports: list[Report] = []
    for suite in suites:
        if suite == "dga":
            rep = verify_dga(args.m, args.k, args.max_disp, args.jobs, gens)
        elif suite == "asteroids":
            rep = a_verify(args.m, args.k, args.max_disp, args.jobs, gens)
        else:
            rep = verify_oracle(suite, args.m, args.k, args.max_disp, args.jobs, gens)
        reports.append(rep)
    if len(reports) == 1:
        out = reports[0].to_dict()
    else:
        out = {
            "suite": "all",
            "params": reports[0].params,
            "passed": all(r.passed for r in reports),
            "reports": [r.to_dict() for r in reports],
            "wall_time": round(sum(r.wall_time for r in reports), 3),
        }
    _emit(out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_export_table(args) -> int:
    """Structure constants of the bounded generator set."""
    _check_params(args.algebra, args.m, args.k, args.max_disp)
    start = time.perf_counter()
    gens = sorted(generator_table(args.algebra, args.m, args.k, args.max_disp, args.cache))
    index = {g: i for i, g in enumerate(gens)}
    by_dom: dict = {}
    for g in gens:
        by_dom.setdefault(g.domain_idempotent, []).append(g)
    differential = []
    for g in gens:
        d = diff(Element.generator(g))
        if d:
            differential.append({"source": index[g], "value": element_to_record(d)})
    products = []
    triangles = []
    for f in gens:
        for g in by_dom.get(f.image_idempotent, ()):
            p = mu2(Element.generator(f), Element.generator(g))
            if p:
                products.append({"left": index[f], "right": index[g],
                                 "value": element_to_record(p)})
            if args.triangles and args.algebra == "pong":
                triangles.append(triangle_record(triangle_domain(f, g)))
    out = {
        "algebra": args.algebra,
        "m": args.m,
        "k": args.k,
        "max_disp": args.max_disp,
        "generators": [generator_to_record(g) for g in gens],
        "differential": differential,
        "products": products,
    }
    if args.triangles and args.algebra == "pong":
        out["triangles"] = triangles
    _emit(out)
    log.info("exported %d generators in %.2fs", len(gens), time.perf_counter() - start)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", choices=["pong", "asteroids"], default="pong")
    common.add_argument("--format", choices=["json"], default="json")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help="directory for cached generator tables")
    common.add_argument("-v", "--verbose", action="store_true")

    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--m", type=int, required=True)
    bounds.add_argument("--k", type=int, required=True)
    bounds.add_argument("--max-disp", type=int, default=3)
    bounds.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(
        prog="pongalg", description="Pong and asteroids algebras with a diagram oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", parents=[common, bounds], help="list generators")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("diff", parents=[common], help="differential of an element")
    p.add_argument("input", nargs="?", help="JSON file (default: stdin)")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("left", nargs="?", help="JSON file, or a [a, b] array on stdin")
    p.add_argument("right", nargs="?")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("verify", parents=[common, bounds], help="run invariant suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-table", parents=[common, bounds],
                       help="dump differential and product tables")
    p.add_argument("--triangles", action="store_true",
                   help="include lifted-triangle data for composable pairs")
    p.set_defaults(func=cmd_export_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except (UsageError, InvalidRecord, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (WeightBookkeepingError, InvariantViolation, GenericityError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
