"""Command-line front end.

Subcommands: ``verify <suite>``, ``classify <kind> <coords>``,
``gram <collection>``, ``mutate <collection> <index> <left|right>``,
``hochschild <algebra>``, ``scan <segre|igusa> --prime <p>``.

Exit codes: 0 all checks pass, 1 at least one failure, 2 usage error.
Large scans stream progress to stderr and results to stdout. JSON reports
are byte-identical across runs for a fixed seed and cache state, so their
runtime_ms field is pinned to 0; wall-clock times appear in text output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classifier as cls
from . import ktheory as kt
from . import quiver as qv
from .cache import cached_singular_scan
from .linalg import ExactMatrix, integer_primitive
from .projective import LinearSubspace, ProjectivePoint
from .segre import NVARS
from .suites import DEFAULT_SEED, SUITE_NAMES, exit_code, run_suite, shared_data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segrecr", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--cache-dir", default=None, help="scan cache directory")
    parser.add_argument("--prime", type=int, default=None, help="prime for scans and oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=("all",) + SUITE_NAMES)

    classify = sub.add_parser("classify", help="classify a section from coordinates")
    classify.add_argument("kind", choices=("hyperplane", "dual-hyperplane", "plane", "point-fiber"))
    classify.add_argument("coords", help="comma-separated rationals; rows ';'-separated for planes")
    classify.add_argument("--oracle", action="store_true", help="cross-check against the finite-field oracle")
    classify.add_argument("--side", choices=("segre", "igusa"), default="segre")

    gram = sub.add_parser("gram", help="Euler-pairing Gram matrix of a builtin collection")
    gram.add_argument("collection", choices=sorted(kt.BUILTIN_COLLECTIONS))

    mutate = sub.add_parser("mutate", help="mutate one object of a builtin collection")
    mutate.add_argument("collection", choices=sorted(kt.BUILTIN_COLLECTIONS))
    mutate.add_argument("index", type=int)
    mutate.add_argument("direction", choices=("left", "right"))

    hochschild = sub.add_parser("hochschild", help="Hochschild cohomology of a builtin algebra")
    hochschild.add_argument("algebra", choices=sorted(qv.BUILTIN_ALGEBRAS))

    scan = sub.add_parser("scan", help="singular locus scan over a prime field")
    scan.add_argument("form", choices=("segre", "igusa"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except BrokenPipeError:
        return 0


def _dispatch(args) -> int:
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "classify":
        return _cmd_classify(args)
    if args.command == "gram":
        return _cmd_gram(args)
    if args.command == "mutate":
        return _cmd_mutate(args)
    if args.command == "hochschild":
        return _cmd_hochschild(args)
    return _cmd_scan(args)


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, cache_dir=args.cache_dir)
    if args.json:
        report = {"suite": args.suite, "checks": [r.to_json_dict() for r in results]}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            prime = f" p={r.prime}" if r.prime else ""
            timing = f" [{r.runtime_ms} ms]" if r.runtime_ms else ""
            line = f"{r.status.upper():7s} {r.suite}/{r.name:<{width}s}{prime}{timing}"
            if r.status != "pass":
                line += f"  expected={r.expected} actual={r.actual}"
            print(line)
        n_fail = sum(r.status == "fail" for r in results)
        n_flag = sum(r.status == "flagged" for r in results)
        print(f"-- {len(results)} checks, {n_fail} failures, {n_flag} flagged")
    return exit_code(results)


def _parse_vector(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as err:
        raise SystemExit(f"malformed coordinates: {err}") from None


def _traceless_point(coords: list[Fraction]) -> tuple[ProjectivePoint, bool]:
    if len(coords) != NVARS:
        raise SystemExit(f"expected {NVARS} coordinates, got {len(coords)}")
    mean = sum(coords) / NVARS
    shifted = [v - mean for v in coords]
    if not any(shifted):
        raise SystemExit("coordinates project to the zero vector")
    return ProjectivePoint(integer_primitive(shifted)), mean != 0


def _cmd_classify(args) -> int:
    data = shared_data()
    if args.kind == "plane":
        rows = [_parse_vector(r) for r in args.coords.split(";")]
        traceless_rows = []
        for r in rows:
            if len(r) != NVARS:
                raise SystemExit(f"expected {NVARS} coordinates per row")
            mean = sum(r) / NVARS
            traceless_rows.append(integer_primitive([v - mean for v in r]))
        sub = LinearSubspace(ExactMatrix(traceless_rows).rref()[0].nonzero_rows().rows)
        report = cls.codim2_profile(data, sub)
        print(f"subspace dimension: {report.dim}")
        print(f"primal section: {report.primal}")
        print(f"dual section: {report.dual}")
        if report.rank_split:
            total, base, extra = report.rank_split
            print(f"numerical rank split: {total} = {base} + {extra}")
        print(f"generic: {report.generic}")
        for note in report.notes:
            print(f"note: {note}")
        return 0
    point, projected = _traceless_point(_parse_vector(args.coords))
    if projected:
        print(f"projected to traceless representative {list(point.integer_coords())}", file=sys.stderr)
    if args.kind == "hyperplane":
        section = cls.classify_hyperplane(data, point)
        print(f"classification: {section}")
        print(f"features: {section.features.describe()}")
        print(f"dual fiber: {cls.dual_fiber(data, point)}")
        if args.oracle:
            primes = (args.prime,) if args.prime else cls.ORACLE_PRIMES
            expected = cls.expected_singular_profile(section)
            if expected is None:
                print("oracle: not applicable to reducible sections")
            else:
                agrees, flagged, details = cls.oracle_agreement(data, point, primes=primes)
                print(f"oracle agreement: {agrees}; details: {details}")
                for p, certs in flagged.items():
                    print(f"bad reduction at {p}: {certs}")
        return 0
    if args.kind == "dual-hyperplane":
        section = cls.classify_dual_hyperplane(data, point)
        print(f"classification: {section}")
        if args.oracle:
            p = args.prime or 101
            print(f"oracle singular count mod {p}: {cls.dual_oracle_count(data, point, p)}")
        return 0
    fiber = cls.derived_point_fiber(data, point, args.side)
    print(f"derived fiber ({args.side} side): {fiber}")
    return 0


def _cmd_gram(args) -> int:
    g = kt.gram(kt.builtin_collection(args.collection))
    if args.json:
        print(json.dumps({"collection": args.collection, "labels": g.labels, "entries": g.entries}))
        return 0
    print(g)
    print(f"unitriangular: {g.is_unitriangular()}")
    if len(g.entries) == 14:
        print(f"rectangular 7+7 blocks: {g.diagonal_blocks_equal(7)}")
    return 0


def _cmd_mutate(args) -> int:
    coll = kt.builtin_collection(args.collection)
    try:
        mutated = kt.mutate(coll, args.index, args.direction)
    except IndexError as err:
        raise SystemExit(str(err)) from None
    for obj in mutated:
        print(f"{obj.label}: {obj.value.coords()}")
    g = kt.gram(mutated)
    print(f"unitriangular after mutation: {g.is_unitriangular()}")
    return 0


def _cmd_hochschild(args) -> int:
    alg = qv.builtin_algebra(args.algebra)
    hh = qv.hochschild_dimensions(alg)
    if args.json:
        print(json.dumps({"algebra": args.algebra, "hh": list(hh), "dimensions": alg.dimensions}))
        return 0
    print(f"graded dimensions: {alg.dimensions} (total {alg.total_dimension})")
    print(f"HH^0, HH^1, HH^2 = {hh}")
    return 0


def _cmd_scan(args) -> int:
    data = shared_data()
    p = args.prime or 11
    hs = data.segre_restricted if args.form == "segre" else data.igusa_restricted

    def progress(stratum, total, found):
        print(f"stratum {stratum + 1}/{total}: {found} points so far", file=sys.stderr)

    points = cached_singular_scan(hs, p, args.cache_dir, progress=progress)
    print(f"# form={args.form} p={p} count={len(points)}")
    for pt in points:
        print(",".join(map(str, pt)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
