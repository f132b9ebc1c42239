"""Command-line front end.

Subcommands: expand (series coefficients), count (enumerative counts),
verify (identity catalog), parity (mod-2 routes), asym (growth ratios),
scan-nonneg (signed-count scan).  Exit status is 0 when every requested
check passes, 1 when a verification fails, 2 on usage errors.  Data goes
to stdout and is byte-stable for fixed flags; timing lines go to stderr.
"""

import argparse
import csv
import json
import sys
import time

from . import families as fam
from . import gflib as gf
from . import growth as gw
from . import identities as idn
from . import parity as par
from .series import UnirankError

__all__ = ["main"]

# series whose zeta-refined form differs from what build() returns
_REFINED_BUILDERS = {
    "Ubar-q": lambda order: gf.series_Ubar(order),
    "Ubar2-q": lambda order: gf.series_Ubar2(order).negate_q(),
    "U2-q": lambda order: gf.series_U2(order).negate_q(),
}
_FAMILY_ALIASES = {"ubar": "left-heavy-overlined"}


class _UsageError(Exception):
    pass


def _family(name: str) -> str:
    key = _FAMILY_ALIASES.get(name, name)
    if key not in fam.FAMILIES:
        choices = ", ".join(fam.FAMILIES + tuple(_FAMILY_ALIASES))
        raise _UsageError(f"unknown family {name!r}; choices: {choices}")
    return key


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _csv_writer():
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["key", "m", "n", "coefficient"])
    return out


def _cmd_expand(args) -> int:
    key = args.series
    if key not in gf.SERIES_KEYS:
        raise _UsageError(
            f"unknown series key {key!r}; choices: {', '.join(gf.SERIES_KEYS)}")
    order = args.order if args.order is not None else gf.default_order()
    if order < 1:
        raise _UsageError("order must be >= 1")
    if args.zeta:
        builder = _REFINED_BUILDERS.get(key)
        series = builder(order) if builder else gf.build(key, order)
        if series.ring.name != "ZETA":
            raise _UsageError(
                f"series {key!r} has no zeta refinement; "
                "try Uzeta or a rank series")
        entries = [(m, n, v) for m, n, v in series.iter_zeta_entries()]
        if args.format == "json":
            _emit_json({"series": key, "order": order, "coefficients": [
                {"m": m, "n": n, "c": str(v)} for m, n, v in entries]})
        else:
            out = _csv_writer()
            for m, n, v in entries:
                out.writerow([key, m, n, v])
        return 0
    series = gf.build(key, order)
    if series.ring.name == "ZETA":
        series = series.marginal()
    if args.format == "json":
        _emit_json({"series": key, "order": order,
                    "coefficients": [str(c) for c in series.coeffs]})
    else:
        out = _csv_writer()
        for n, c in enumerate(series.coeffs):
            out.writerow([key, "", n, c])
    return 0


def _cmd_count(args) -> int:
    family = _family(args.family)
    if args.max_n < 0:
        raise _UsageError("--max-n must be >= 0")
    if args.by_rank:
        entries = []
        for n in range(args.max_n + 1):
            for m, c in sorted(fam.count_by_rank(family, n).items()):
                entries.append((m, n, c))
        if args.format == "json":
            _emit_json({"family": family, "max_n": args.max_n, "counts": [
                {"m": m, "n": n, "c": str(c)} for m, n, c in entries]})
        else:
            out = _csv_writer()
            for m, n, c in entries:
                out.writerow([family, m, n, c])
        return 0
    counts = [fam.count(family, n) for n in range(args.max_n + 1)]
    if args.format == "json":
        _emit_json({"family": family, "max_n": args.max_n,
                    "counts": [str(c) for c in counts]})
    else:
        out = _csv_writer()
        for n, c in enumerate(counts):
            out.writerow([family, "", n, c])
    return 0


def _cmd_verify(args) -> int:
    order = args.order if args.order is not None else gf.default_order()
    keys = idn.IDENTITY_KEYS if args.all or args.key is None else (args.key,)
    for key in keys:
        if key not in idn.IDENTITY_KEYS:
            raise _UsageError(f"unknown identity key {key!r}; "
                              f"choices: {', '.join(idn.IDENTITY_KEYS)}")
    started = time.perf_counter()
    reports = [idn.verify(key, order) for key in keys]
    elapsed = time.perf_counter() - started
    ok = all(r.passed for r in reports)
    if args.format == "json":
        _emit_json({
            "order": order,
            "all_passed": ok,
            "reports": [{
                "key": r.key,
                "passed": r.passed,
                "first_mismatch": list(r.first_mismatch)
                if r.first_mismatch is not None else None,
                "detail": r.detail,
            } for r in reports],
        })
    else:
        for r in reports:
            if r.passed:
                print(f"{r.key}: ok through q^{order}")
            else:
                print(f"{r.key}: FAIL first mismatch {r.first_mismatch}")
    print(f"verified {len(reports)} identities in {elapsed:.2f}s",
          file=sys.stderr)
    return 0 if ok else 1


def _cmd_parity(args) -> int:
    if args.max_n < 1:
        raise _UsageError("--max-n must be >= 1")
    result = par.parity_agreement(args.max_n)
    bad = result["disagreements"]
    odd = [n for n in range(1, args.max_n + 1)
           if result["count"] >> n & 1]
    if args.format == "json":
        _emit_json({
            "max_n": args.max_n,
            "disagreements": bad,
            "odd_count": len(odd),
            "passed": not bad,
        })
    else:
        print(f"routes agree through n = {args.max_n}: "
              f"{'yes' if not bad else 'NO'}")
        print(f"disagreements: {len(bad)}")
        print(f"odd positions: {len(odd)}")
    return 0 if not bad else 1


def _cmd_asym(args) -> int:
    if args.target not in gw.COUNT_KEYS:
        raise _UsageError(f"unknown target {args.target!r}; "
                          f"choices: {', '.join(gw.COUNT_KEYS)}")
    try:
        checkpoints = tuple(int(x) for x in args.checkpoints.split(","))
    except ValueError:
        raise _UsageError("--checkpoints wants comma-separated integers")
    if len(checkpoints) < 2 or any(n < 1 for n in checkpoints) \
            or list(checkpoints) != sorted(set(checkpoints)):
        raise _UsageError("--checkpoints must be distinct, ascending, >= 1")
    started = time.perf_counter()
    counts = gw.exact_counts(args.target, max(checkpoints))
    rows = []
    gaps = []
    for n in checkpoints:
        main = gw.asymptotic_main(args.target, n)
        ratio = counts[n] / main
        gaps.append(abs(ratio - 1.0))
        rows.append({"n": n, "count": str(counts[n]),
                     "main_term": main, "ratio": ratio})
    improving = all(a > b for a, b in zip(gaps, gaps[1:]))
    elapsed = time.perf_counter() - started
    if args.emit == "json":
        _emit_json({"target": args.target,
                    "rows": rows, "trend_improving": improving})
    else:
        for row in rows:
            print(f"n={row['n']} count={row['count']} "
                  f"ratio={row['ratio']:.6f}")
        print(f"|ratio - 1| strictly decreasing: "
              f"{'yes' if improving else 'NO'}")
    print(f"asym report in {elapsed:.2f}s", file=sys.stderr)
    return 0 if improving else 1


def _cmd_scan_nonneg(args) -> int:
    family = _family(args.family)
    if args.max_n < 0:
        raise _UsageError("--max-n must be >= 0")
    negatives = []
    for n in range(args.max_n + 1):
        for m, c in sorted(fam.count_by_rank(family, n).items()):
            if c < 0:
                negatives.append((m, n, c))
    if args.format == "json":
        _emit_json({"family": family, "max_n": args.max_n,
                    "negatives": [{"m": m, "n": n, "c": str(c)}
                                  for m, n, c in negatives]})
    else:
        print(f"{family}: scanned n <= {args.max_n}, "
              f"{len(negatives)} negative entries")
        for m, n, c in negatives:
            print(f"  m={m} n={n} count={c}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unirank",
        description="Exact q-series expansions, identity checks, "
                    "parity routes, and growth reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="series coefficients")
    p.add_argument("--series", required=True, metavar="KEY")
    p.add_argument("--order", type=int, default=None,
                   help="truncation order (default UNIRANK_ORDER or 100)")
    p.add_argument("--zeta", action="store_true",
                   help="emit zeta-refined entries (m, n, c)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("count", help="enumerative counts by size")
    p.add_argument("--family", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--by-rank", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="identity catalog checks")
    p.add_argument("--key", default=None, metavar="KEY")
    p.add_argument("--all", action="store_true",
                   help="verify the whole catalog (default)")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("parity", help="mod-2 route agreement")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_parity)

    p = sub.add_parser("asym", help="exact counts against growth rates")
    p.add_argument("--target", default="u2bar")
    p.add_argument("--checkpoints", default="500,1000,2000")
    p.add_argument("--emit", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("scan-nonneg",
                       help="report negative rank-refined counts")
    p.add_argument("--family", required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_scan_nonneg)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnirankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
