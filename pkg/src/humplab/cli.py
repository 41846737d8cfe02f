"""Command-line front end.

    humplab seq <name> [params] --from N --to M [--route closed|rec|enum|prop] [--format csv|json|table]
    humplab verify <id|all> [--from N --to M] [--format table|json]
    humplab enumerate <family> <n> [--with-humps] [--format csv|json|table]

Exit codes: 0 success, 1 an identity failed, 2 usage or cap error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Iterable, Sequence

from humplab import formulas, paths, verify
from humplab.combinat import CapExceeded, ConsistencyError
from humplab.partitions import hook_sum, s11_closed, s21_closed, strip_sum_closed

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _seq_names() -> dict[str, str]:
    names = {name.lower(): name for name in formulas.SEQUENCES}
    names["s"] = "S"
    return names


def _hook_routes(k: int, ell: int) -> dict[str, Callable[[int], int]]:
    routes: dict[str, Callable[[int], int]] = {"enum": lambda n: hook_sum((k, ell), n)}
    if ell == 0 and 2 <= k <= 5:
        routes["closed"] = lambda n: strip_sum_closed(k, n)
    elif (k, ell) == (1, 1):
        routes["closed"] = s11_closed
    elif (k, ell) in ((2, 1), (1, 2)):
        routes["closed"] = s21_closed
    return routes


def _write_records(rows: Iterable[Sequence], header: Sequence[str], fmt: str, out,
                   summary: Callable[[], dict] | None = None) -> None:
    """Stream rows; every integer is written as a decimal string.

    ``summary`` is called once the rows are exhausted.
    """
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(str(v) for v in row) + "\n")
        if summary:
            out.write("# " + " ".join(f"{k}={v}" for k, v in summary().items()) + "\n")
    elif fmt == "json":
        records = [{h: str(v) for h, v in zip(header, row)} for row in rows]
        if summary:
            records.append({k: str(v) for k, v in summary().items()})
        json.dump(records, out, indent=1)
        out.write("\n")
    else:
        widths = [max(len(h), 8) for h in header]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for row in rows:
            cells = [str(v) if str(v) else "(empty)" for v in row]
            out.write("  ".join(c.rjust(w) for c, w in zip(cells, widths)) + "\n")
        if summary:
            out.write(" ".join(f"{k}={v}" for k, v in summary().items()) + "\n")


def cmd_seq(args, out) -> int:
    names = _seq_names()
    key = args.name.lower()
    if key not in names:
        raise UsageError(f"unknown sequence {args.name!r}; known: {', '.join(sorted(names.values()))}")
    name = names[key]
    if name == "S":
        if len(args.params) != 2:
            raise UsageError("sequence S takes two parameters: k ell")
        k, ell = (int(p) for p in args.params)
        routes, first = _hook_routes(k, ell), 0
    else:
        if args.params:
            raise UsageError(f"sequence {name} takes no parameters")
        spec = formulas.SEQUENCES[name]
        routes, first = spec.routes, spec.first_n
    route = args.route or next(iter(routes))
    if route not in routes:
        raise UsageError(f"route {route!r} not available for {name}; choose from {', '.join(routes)}")
    lo = first if args.lo is None else args.lo
    hi = lo if args.hi is None else args.hi
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {lo}..{hi}")
    fn = routes[route]
    rows = [(n, fn(n)) for n in range(lo, hi + 1)]
    _write_records(rows, ("n", "value"), args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.id == "all":
        reports = verify.check_all(200 if args.hi is None else args.hi, args.hi_enum, workers=args.workers, lo=args.lo)
    else:
        try:
            ident = verify.get(args.id)
        except verify.UnknownIdentity as e:
            raise UsageError(e.args[0]) from None
        lo = ident.valid_from if args.lo is None else args.lo
        default_hi = args.hi_enum if ident.kind == "enum" else min(200, ident.max_n)
        hi = max(lo, default_hi) if args.hi is None else args.hi
        reports = [verify.check(ident, lo, hi)]
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], out, indent=1)
        out.write("\n")
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{status}  {r.id:<36} n={r.lo}..{r.hi}  {r.elapsed * 1000:9.1f} ms\n")
            for n, a, b in r.failures:
                out.write(f"      n={n}: lhs={a} rhs={b}\n")
        bad = sum(not r.passed for r in reports)
        out.write(f"{len(reports) - bad}/{len(reports)} identities passed\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    kind = paths.FamilyKind.parse(args.family)
    fam = paths.PathFamily(kind, args.n)
    cap = args.max_enum_n if args.max_enum_n is not None else paths.enumeration_cap(kind)
    if args.n > cap:
        raise CapExceeded(f"{kind.value} enumeration at n={args.n} exceeds cap {cap} (raise with --max-enum-n)")
    if args.with_humps and kind.is_super:
        raise UsageError("humps are not defined for super paths")
    totals = {"total_paths": 0, "total_humps": 0}

    def rows():
        for p in paths.enumerate_paths(fam):
            totals["total_paths"] += 1
            if args.with_humps:
                h = paths.hump_count(p)
                totals["total_humps"] += h
                yield p.steps, h
            else:
                yield (p.steps,)

    header = ("path", "humps") if args.with_humps else ("path",)
    if not args.with_humps:
        del totals["total_humps"]
    _write_records(rows(), header, args.format, out, lambda: totals)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="humplab", description="Hump statistics of lattice paths and hook sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a sequence over a range of n")
    p.add_argument("name", help="HC, HM, SD, SM, HS40, B, catalan, motzkin, or S (with k ell)")
    p.add_argument("params", nargs="*", help="extra parameters, e.g. k ell for S")
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.add_argument("--route", choices=("closed", "rec", "enum", "prop"))
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="check identities exactly over a range")
    p.add_argument("id", help="identity id or 'all'")
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    p.add_argument("--enum-to", dest="hi_enum", type=int, default=12,
                   help="upper n for enumeration-backed identities (default 12)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list every path of a family")
    p.add_argument("family", help=", ".join(k.value for k in paths.FamilyKind))
    p.add_argument("n", type=int)
    p.add_argument("--with-humps", action="store_true")
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.set_defaults(func=cmd_enumerate)

    for p in sub.choices.values():
        p.add_argument("--max-enum-n", type=int, default=None,
                       help="override the enumeration cap (also HUMPLAB_MAX_ENUM_N)")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    saved = os.environ.get("HUMPLAB_MAX_ENUM_N")
    if args.max_enum_n is not None:
        os.environ["HUMPLAB_MAX_ENUM_N"] = str(args.max_enum_n)
    try:
        return args.func(args, out)
    except (UsageError, CapExceeded, verify.RangeError, ValueError) as e:
        print(f"humplab: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as e:
        print(f"humplab: consistency failure: {e}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        if saved is None:
            os.environ.pop("HUMPLAB_MAX_ENUM_N", None)
        else:
            os.environ["HUMPLAB_MAX_ENUM_N"] = saved


if __name__ == "__main__":
    sys.exit(main())
