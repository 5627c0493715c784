"""Command-line interface.

Subcommands are thin shells over the library; every numeric answer is the
exact library result.  Output formats: json (default), csv, plain.  Long
enumerations stream NDJSON, one record per line.  Exit codes: 0 success,
1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys

from . import arrangements, bunches, complexes, coxrelations, crosscheck, hyper_cones


def _emit(obj: dict, fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True), file=out)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        keys = sorted(obj)
        w.writerow(keys)
        w.writerow([obj[k] for k in keys])
        out.write(buf.getvalue())
    else:
        for k in sorted(obj):
            print(f"{k}={obj[k]}", file=out)


def _workers(args) -> int:
    env = os.environ.get("POLYCREP_WORKERS")
    if env is not None:
        return max(1, int(env))
    return max(1, args.parallelism)


def _count_prefix_task(task):
    n, prefix = task
    return complexes.count_max_biconnected(n, prefix)


def cmd_complexes_count(args) -> int:
    n = args.n
    if args.full_only:
        total = sum(1 for _ in complexes.enumerate_max_biconnected(
            n, full_only=True))
    else:
        workers = _workers(args)
        if workers == 1:
            total = complexes.count_max_biconnected(n)
        else:
            depth = max(3, (4 * workers - 1).bit_length())
            tasks = [(n, tuple(bool(b >> t & 1) for t in range(depth)))
                     for b in range(1 << depth)]
            with multiprocessing.Pool(workers) as pool:
                total = sum(pool.map(_count_prefix_task, tasks, chunksize=8))
    _emit({"n": n, "count": total, "full_only": args.full_only}, args.format)
    return 0


def cmd_complexes_enumerate(args) -> int:
    for d in complexes.enumerate_max_biconnected(args.n,
                                                 full_only=args.full_only):
        print(json.dumps(d.to_json_obj(), sort_keys=True))
    return 0


def cmd_resolutions_census(args) -> int:
    if args.records:
        for rec in hyper_cones.census(args.n):
            print(json.dumps(rec.to_json_obj(), sort_keys=True))
        return 0
    _emit(hyper_cones.census_counts(args.n), args.format)
    return 0


def cmd_chambers_count(args) -> int:
    if args.arrangement == "A":
        a = arrangements.build_A(args.n)
    else:
        if args.m is None:
            raise ValueError("--m is required for arrangement B")
        a = arrangements.build_B(args.n, args.m)
    if args.in_cone and args.at_ray:
        raise ValueError("--in-cone and --at-ray are mutually exclusive")
    if args.in_cone:
        cone = (arrangements.cone_F(a.dim) if args.in_cone == "F"
                else arrangements.cone_C0(a.dim))
        regions = arrangements.count_regions_in_cone(a, cone)
        method = "enumerate"
    elif args.at_ray:
        theta = [int(v) for v in args.at_ray.split(",")]
        regions = arrangements.count_chambers_at_ray(a, theta)
        method = "enumerate"
    else:
        regions = arrangements.count_regions(a, args.method)
        method = args.method
    _emit({"arrangement": args.arrangement, "n": args.n, "m": args.m,
           "regions": regions, "method": method}, args.format)
    return 0


def cmd_bunches_classify(args) -> int:
    total = proj = 0
    for d in complexes.enumerate_max_biconnected(args.n, full_only=True):
        total += 1
        if bunches.is_projective(bunches.phi_from_complex(d)):
            proj += 1
    _emit({"n": args.n, "total": total, "projective": proj,
           "nonprojective": total - proj}, args.format)
    return 0


def cmd_cox_verify(args) -> int:
    identities = coxrelations.iota_substitution_identities(args.n)
    failures = 0
    for s in range(args.samples):
        pt = coxrelations.sample_X_point(args.n, args.seed + s)
        if not coxrelations.verify_relations_vanish(pt):
            failures += 1
    _emit({"n": args.n, "samples": args.samples, "failures": failures,
           "identities": "ok" if identities else "failed"}, args.format)
    return 0 if identities and failures == 0 else 1


def cmd_oracle_crosscheck(args) -> int:
    bad = 0
    for report in crosscheck.run_all(args.n, args.max_k):
        _emit(report, args.format)
        bad += report["mismatches"]
    return 0 if bad == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polycrep")
    p.add_argument("--format", choices=("json", "csv", "plain"),
                   default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--parallelism", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    cx = sub.add_parser("complexes").add_subparsers(dest="sub", required=True)
    c = cx.add_parser("count")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--full-only", action="store_true")
    c.set_defaults(func=cmd_complexes_count)
    c = cx.add_parser("enumerate")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--full-only", action="store_true")
    c.set_defaults(func=cmd_complexes_enumerate)

    rs = sub.add_parser("resolutions").add_subparsers(dest="sub",
                                                      required=True)
    c = rs.add_parser("census")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--records", action="store_true",
                   help="stream one NDJSON record per complex")
    c.set_defaults(func=cmd_resolutions_census)

    ch = sub.add_parser("chambers").add_subparsers(dest="sub", required=True)
    c = ch.add_parser("count")
    c.add_argument("--arrangement", choices=("A", "B"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int)
    c.add_argument("--in-cone", choices=("F", "C0"))
    c.add_argument("--at-ray", help="comma-separated integer coordinates")
    c.add_argument("--method", choices=("enumerate", "charpoly"),
                   default="enumerate")
    c.set_defaults(func=cmd_chambers_count)

    bn = sub.add_parser("bunches").add_subparsers(dest="sub", required=True)
    c = bn.add_parser("classify")
    c.add_argument("--n", type=int, required=True)
    c.set_defaults(func=cmd_bunches_classify)

    co = sub.add_parser("cox").add_subparsers(dest="sub", required=True)
    c = co.add_parser("verify")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--samples", type=int, default=100)
    c.set_defaults(func=cmd_cox_verify)

    orc = sub.add_parser("oracle").add_subparsers(dest="sub", required=True)
    c = orc.add_parser("crosscheck")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--max-k", type=int, default=3)
    c.set_defaults(func=cmd_oracle_crosscheck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
