"""Command-line interface.

Exit codes are the machine contract: 0 for a positive verdict, 3 for a
negative one, 2 for malformed or oversized input, 1 for internal errors.
check/lift/verify/oracle write a single JSON object to stdout; bench
writes CSV.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from fractions import Fraction

from troplift import __version__
from troplift.formats import (
    FormatError,
    loads,
    parse_instance,
    parse_point,
    parse_witness,
    render_series,
    serialize_instance,
    serialize_point,
    serialize_scalar,
    serialize_witness,
)
from troplift.gen import GenConfig, gen_member, gen_point, gen_random
from troplift.lift import decide, verify_witness
from troplift.oracle import MAX_ORACLE_COLUMNS, TooLargeError, member_oracle

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_NEGATIVE = 3


def _read_json(path, what):
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode("utf-8")
    except OSError as exc:
        raise FormatError(str(exc), what)
    return loads(text, what)


def _load_problem(args):
    t0 = time.perf_counter()
    inst = parse_instance(_read_json(args.instance, "instance"))
    point = parse_point(_read_json(args.point, "point"))
    if len(point) != inst.n:
        raise FormatError("point has %d coordinates but the instance has %d "
                          "columns" % (len(point), inst.n), "point.v")
    return inst, point, (time.perf_counter() - t0) * 1000.0


def _cmd_check(args):
    if args.expand is not None:
        try:
            Fraction(args.expand)
        except (ValueError, ZeroDivisionError):
            raise FormatError("not a rational order: %r" % args.expand,
                              "--expand")
    inst, point, parse_ms = _load_problem(args)
    t0 = time.perf_counter()
    result = decide(inst, point)
    decide_ms = (time.perf_counter() - t0) * 1000.0
    out = {"verdict": "member" if result.is_member else "not_member"}
    if result.is_member:
        out["witness"] = [serialize_scalar(x) for x in result.witness]
        if args.expand is not None:
            order = Fraction(args.expand)
            out["witness_expanded"] = [render_series(x, order)
                                       for x in result.witness]
    else:
        out["reason"] = result.stage
        print("rejected: %s" % result.detail, file=sys.stderr)
    out["timings"] = {"parse_ms": round(parse_ms, 3),
                      "decide_ms": round(decide_ms, 3),
                      "total_ms": round(parse_ms + decide_ms, 3)}
    print(json.dumps(out, indent=2))
    return EXIT_OK if result.is_member else EXIT_NEGATIVE


def _cmd_verify(args):
    inst, point, _ = _load_problem(args)
    witness = parse_witness(_read_json(args.witness, "witness"))
    if len(witness) != inst.n:
        raise FormatError("witness has %d coordinates but the instance has "
                          "%d columns" % (len(witness), inst.n), "witness.x")
    ok = verify_witness(inst, point, witness)
    print(json.dumps({"verified": ok}))
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_oracle(args):
    inst, point, parse_ms = _load_problem(args)
    t0 = time.perf_counter()
    verdict = member_oracle(inst, point, max_cols=args.max_cols)
    oracle_ms = (time.perf_counter() - t0) * 1000.0
    out = {"verdict": "member" if verdict else "not_member",
           "timings": {"parse_ms": round(parse_ms, 3),
                       "oracle_ms": round(oracle_ms, 3)}}
    print(json.dumps(out, indent=2))
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _gen_config(args):
    try:
        return GenConfig(seed=args.seed, m=args.m, n=args.n,
                         terms_per_entry=args.terms, exp_lo=args.exp_lo,
                         exp_hi=args.exp_hi, grid_den=args.grid_den,
                         coeff_bound=args.coeff_bound)
    except ValueError as exc:
        raise FormatError(str(exc), "gen flags")


def _cmd_gen(args):
    cfg = _gen_config(args)
    payload = {}
    if args.member:
        inst, point, planted = gen_member(cfg)
        payload["witness"] = serialize_witness(planted)
    else:
        inst = gen_random(cfg)
        point = gen_point(cfg)
    payload["instance"] = serialize_instance(inst)
    payload["point"] = serialize_point(point)
    if args.output:
        written = []
        for kind in ("instance", "point", "witness"):
            if kind in payload:
                path = "%s.%s.json" % (args.output, kind)
                with open(path, "w") as fh:
                    json.dump(payload[kind], fh, indent=2)
                    fh.write("\n")
                written.append(path)
        print(json.dumps({"written": written}))
    else:
        print(json.dumps(payload, indent=2))
    return EXIT_OK


def _cmd_bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise FormatError("sizes must be a comma-separated integer list",
                          "bench --sizes")
    if not sizes or any(s < 1 for s in sizes):
        raise FormatError("sizes must be positive", "bench --sizes")
    lines = ["n,m,decide_ms,oracle_ms"]
    for n in sizes:
        m = max(1, n // 2)
        decide_times = []
        oracle_times = []
        for rep in range(args.reps):
            cfg = GenConfig(seed=args.seed + 1000 * rep + n, m=m, n=n,
                            terms_per_entry=3, exp_lo=-5, exp_hi=5,
                            grid_den=1, coeff_bound=9)
            inst, point, _ = gen_member(cfg)
            t0 = time.perf_counter()
            result = decide(inst, point)
            decide_times.append((time.perf_counter() - t0) * 1000.0)
            if not result.is_member:
                raise RuntimeError("planted bench point was rejected")
            if n + 1 <= args.oracle_max_cols:
                t0 = time.perf_counter()
                member_oracle(inst, point, max_cols=args.oracle_max_cols)
                oracle_times.append((time.perf_counter() - t0) * 1000.0)
        decide_ms = "%.3f" % statistics.median(decide_times)
        oracle_ms = ("%.3f" % statistics.median(oracle_times)
                     if oracle_times else "skipped")
        lines.append("%d,%d,%s,%s" % (n, m, decide_ms, oracle_ms))
    table = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="troplift",
        description="Decide whether a rational point lies in the tropical "
                    "linear variety of A*x = b over Puiseux series, with an "
                    "exact witness on yes.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_problem_flags(p):
        p.add_argument("-i", "--instance", required=True,
                       help="instance JSON file")
        p.add_argument("-p", "--point", required=True, help="point JSON file")

    for name in ("check", "lift"):
        p = sub.add_parser(name, help="decide membership and emit a witness")
        add_problem_flags(p)
        p.add_argument("--expand", metavar="E", default=None,
                       help="also render witness expansions through order E")
        p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="check a witness file exactly")
    add_problem_flags(p)
    p.add_argument("-w", "--witness", required=True, help="witness JSON file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force verdict (exponential)")
    add_problem_flags(p)
    p.add_argument("--max-cols", type=int, default=MAX_ORACLE_COLUMNS,
                   help="enumeration guard (default %d)" % MAX_ORACLE_COLUMNS)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate instance/point files")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--member", action="store_true",
                   help="plant a solution and emit its point and witness")
    p.add_argument("--terms", type=int, default=3)
    p.add_argument("--exp-lo", type=int, default=-3)
    p.add_argument("--exp-hi", type=int, default=3)
    p.add_argument("--grid-den", type=int, default=1)
    p.add_argument("--coeff-bound", type=int, default=9)
    p.add_argument("-o", "--output", metavar="PREFIX",
                   help="write PREFIX.instance.json / PREFIX.point.json "
                        "(and PREFIX.witness.json with --member)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench",
                       help="time decide against the brute-force oracle")
    p.add_argument("--sizes", default="25,50,100,200",
                   help="comma-separated column counts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--oracle-max-cols", type=int, default=MAX_ORACLE_COLUMNS)
    p.add_argument("-o", "--output", help="CSV output path (default stdout)")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, TooLargeError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - defect path
        print("internal error: %s: %s" % (type(exc).__name__, exc),
              file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
