"""Command-line interface.

Subcommands: sres, syl-single, syl-double, sylm, schur, verify, fuzz.
Exit codes: 0 success / all properties pass, 1 at least one property
failure, 2 usage or parse error. Output is human-readable by default;
--json switches to the structured wire formats.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ParseError, SylresError, ValidationError
from .io import parse_index_set, parse_multiset, parse_poly
from .poly import Poly
from .rationals import format_rational
from .rootsets import RootMultiset
from .schur import SchurSpec, schur_poly_x, schur_value
from .sylvester import sres_det, syl_double, syl_single, sylm, sylm_terms
from .verify import SUITE_NAMES, FuzzConfig, replay, run_suite


def _poly_or_roots(text: str) -> Poly:
    """A polynomial argument: coefficient JSON/list, or roots shorthand."""
    s = text.strip()
    if s.startswith("{") and "roots" not in s:
        return parse_poly(s)
    if s.startswith("roots:"):
        return Poly.from_roots(parse_multiset(s[len("roots:"):]).values())
    return parse_poly(s)


def _emit_poly(p: Poly, as_json: bool) -> None:
    print(json.dumps(p.to_json()) if as_json else str(p))


def _fuzz_config(args) -> FuzzConfig:
    return FuzzConfig(seed=args.seed, count=args.count,
                      max_deg=args.max_deg, coeff_bound=args.coeff_bound,
                      allow_shared_roots=not args.no_shared_roots)


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sylres",
        description="Exact subresultants and Sylvester sums in the roots")
    top.add_argument("--json", action="store_true",
                     help="structured JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sres", help="determinant-definition subresultant")
    p.add_argument("-f", required=True,
                   help='poly: coeff list "2,-3,1", coeff JSON, or roots:...')
    p.add_argument("-g", required=True)
    p.add_argument("-d", type=int, required=True)

    p = sub.add_parser("syl-single", help="Sylvester single sum (A a set)")
    p.add_argument("-a", required=True, help="multiset shorthand or JSON")
    p.add_argument("-b", required=True)
    p.add_argument("-d", type=int, required=True)

    p = sub.add_parser("syl-double", help="Sylvester double sum (sets)")
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)

    p = sub.add_parser("sylm", help="multiset Sylvester sum")
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--trace", action="store_true",
                   help="dump every term (partition, subsets, sign, value)")
    p.add_argument("--force-bigd", action="store_true",
                   help="apply the collapsed two-index formula outside its "
                        "range (debug; no correctness claim)")

    p = sub.add_parser("schur", help="confluent Schur polynomial value")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-R", default="", help="removed rows, comma list")
    p.add_argument("--points", required=True, help="multiset shorthand")
    p.add_argument("--with-x", action="store_true",
                   help="adjoin one symbolic point; prints a polynomial")

    p = sub.add_parser("verify", help="run an identity-verification suite")
    p.add_argument("suite", choices=sorted(SUITE_NAMES) + ["all"])
    _add_fuzz_args(p)
    p.add_argument("--replay", metavar="FILE",
                   help="re-run one recorded failure instance from FILE")

    p = sub.add_parser("fuzz", help="run all randomized suites")
    _add_fuzz_args(p)
    return top


def _add_fuzz_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--max-deg", type=int, default=6)
    p.add_argument("--coeff-bound", type=int, default=8)
    p.add_argument("--no-shared-roots", action="store_true")


def _cmd_sylm(args) -> int:
    a = parse_multiset(args.a)
    b = parse_multiset(args.b)
    if args.trace:
        terms = list(sylm_terms(a, b, args.d,
                                force_collapsed=args.force_bigd))
        total = Poly.zero()
        for t in terms:
            total = total + t.value
        if args.json:
            print(json.dumps({
                "value": total.to_json(),
                "terms": [{
                    "partition": [list(blk) for blk in t.partition.blocks],
                    "a_prime": [format_rational(v) for v in t.a_prime.values()],
                    "b_prime": [format_rational(v) for v in t.b_prime.values()],
                    "sign": t.sign,
                    "value": t.value.to_json(),
                } for t in terms]}))
        else:
            for t in terms:
                blocks = "|".join(",".join(map(str, blk))
                                  for blk in t.partition.blocks)
                aps = ",".join(format_rational(v) for v in t.a_prime.values())
                bps = ",".join(format_rational(v) for v in t.b_prime.values())
                print(f"R=({blocks}) A'=({aps}) B'=({bps}) "
                      f"sign={t.sign:+d} value={t.value}")
            print(f"total: {total}")
        return 0
    _emit_poly(sylm(a, b, args.d, force_collapsed=args.force_bigd),
               args.json)
    return 0


def _cmd_schur(args) -> int:
    points = parse_multiset(args.points)
    removed = parse_index_set(args.R)
    spec = SchurSpec(args.k, removed, points, with_x=args.with_x)
    if args.with_x:
        _emit_poly(schur_poly_x(spec), args.json)
    else:
        value = schur_value(spec)
        print(json.dumps({"value": format_rational(value)})
              if args.json else format_rational(value))
    return 0


def _cmd_verify(args) -> int:
    if args.replay:
        with open(args.replay) as fh:
            record = json.load(fh)
        suite = record.get("suite", args.suite)
        result = replay(suite, record["instance"])
        print(json.dumps(result, sort_keys=True) if args.json
              else f"replay {suite}: {'PASS' if result.get('ok') else 'FAIL'}"
                   f" {json.dumps(result, sort_keys=True)}")
        return 0 if result.get("ok") else 1
    cfg = _fuzz_config(args)
    names = sorted(SUITE_NAMES) if args.suite == "all" else [args.suite]
    return _run_suites(names, cfg, args.json)


def _run_suites(names, cfg: FuzzConfig, as_json: bool) -> int:
    reports = [run_suite(name, cfg) for name in names]
    if as_json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        for r in reports:
            print(r.human())
    return 0 if all(r.ok for r in reports) else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sres":
            _emit_poly(sres_det(_poly_or_roots(args.f),
                                _poly_or_roots(args.g), args.d), args.json)
            return 0
        if args.command == "syl-single":
            _emit_poly(syl_single(parse_multiset(args.a),
                                  parse_multiset(args.b), args.d), args.json)
            return 0
        if args.command == "syl-double":
            _emit_poly(syl_double(parse_multiset(args.a),
                                  parse_multiset(args.b),
                                  args.p, args.q), args.json)
            return 0
        if args.command == "sylm":
            return _cmd_sylm(args)
        if args.command == "schur":
            return _cmd_schur(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "fuzz":
            return _run_suites(sorted(SUITE_NAMES), _fuzz_config(args),
                               args.json)
        raise AssertionError(f"unhandled command {args.command}")
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SylresError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
