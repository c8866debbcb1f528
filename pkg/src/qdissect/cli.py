"""``qdissect`` command-line front end.

Exit status: 0 when output was produced and every check passed, 1 when at
least one verification failed, 2 on usage or evaluation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass

from qdissect import congruences, identities, oracle
from qdissect.dsl import ParseError, evaluate, parse_expr, pretty
from qdissect.series import EXACT, Ring, SeriesError

log = logging.getLogger("qdissect")

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    order: int = 500
    modulus: int | None = None
    format: str = "table"
    identity: str | None = None
    k: int | None = None
    n_max: int | None = None
    verbosity: int = 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default=None,
                        help="output format (default: table on a terminal, json otherwise)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="qdissect", description="q-series expansion and identity checking")
    sub = p.add_subparsers(dest="subcommand", required=True)

    e = sub.add_parser("expand", parents=[common], help="expand an expression")
    e.add_argument("--expr", required=True)
    e.add_argument("--order", type=_nonnegative, default=500)
    e.add_argument("--modulus", type=int, default=None)

    o = sub.add_parser("oracle", parents=[common], help="tabulate a partition family by DP")
    o.add_argument("--family", required=True, help=", ".join(f.value for f in oracle.Family))
    o.add_argument("--max", dest="n_max", type=_nonnegative, default=20)

    v = sub.add_parser("verify", parents=[common], help="check registry identities")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", dest="identity")
    which.add_argument("--all", action="store_true")
    which.add_argument("--export-json", action="store_true", help="print the registry as JSON")
    v.add_argument("--order", type=_positive, default=500)
    v.add_argument("--workers", type=_positive, default=1)

    c = sub.add_parser("congruence", parents=[common], help="check congruence families for b(n)")
    fam = c.add_mutually_exclusive_group(required=True)
    fam.add_argument("--eq17", action="store_true", help="b(3n+2) = 0 (mod 3)")
    fam.add_argument("--family19", action="store_true", help="internal family with index --k")
    fam.add_argument("--eq110", action="store_true", help="b(81n+24) = -b(9n+3) (mod 3)")
    c.add_argument("--k", type=_nonnegative, default=1)
    c.add_argument("--nmax", dest="n_max", type=_nonnegative, default=30)
    c.add_argument("--order-cap", type=_positive, default=congruences.DEFAULT_ORDER_CAP)
    c.add_argument("--max-k", type=_nonnegative, default=congruences.DEFAULT_MAX_K)

    s = sub.add_parser("search", parents=[common], help="scan residue classes for vanishing coefficients")
    s.add_argument("--expr", required=True)
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--step", type=_positive, required=True)
    s.add_argument("--nmax", dest="n_max", type=_nonnegative, default=300)
    return p


# rendering --------------------------------------------------------------------


def _csv(rows, header=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def _emit(out, fmt, obj, rows, header, csv_header=True):
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    elif fmt == "csv":
        out.write(_csv(rows, header if csv_header else None))
    else:
        out.write(_table(rows, header))


# subcommands ------------------------------------------------------------------


def _ring(modulus):
    return EXACT if modulus is None else Ring(modulus)


def cmd_expand(args, out) -> int:
    ring = _ring(args.modulus)
    s = evaluate(parse_expr(args.expr), ring, args.order)
    obj = {"expr": args.expr, "ring": str(ring), "order": s.order, "coeffs": [str(c) for c in s.coeffs]}
    _emit(out, args.format, obj, list(enumerate(s.coeffs)), ["n", "coeff"], csv_header=False)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    fam = oracle.Family.parse(args.family)
    counts = oracle.count_table(fam, args.n_max)
    obj = {"family": fam.value, "max": args.n_max, "counts": [str(c) for c in counts]}
    _emit(out, args.format, obj, list(enumerate(counts)), ["n", "count"], csv_header=False)
    return EXIT_OK


_REPORT_HEADER = ["id", "kind", "modulus", "order", "status", "n", "lhs", "rhs", "millis"]


def _report_row(r: identities.VerificationReport):
    n, lhs, rhs = r.first_mismatch if r.first_mismatch else ("", "", "")
    return [r.id, r.kind, r.modulus or "", r.order, r.status, n, lhs, rhs, f"{r.millis:.1f}"]


def cmd_verify(args, out) -> int:
    if args.export_json:
        out.write(json.dumps([e.to_dict() for e in identities.registry()], indent=2) + "\n")
        return EXIT_OK
    if args.all:
        reports = identities.verify_all(args.order, workers=args.workers)
        obj = [r.to_dict() for r in reports]
    else:
        reports = [identities.verify_identity(args.identity, args.order)]
        obj = reports[0].to_dict()
    for r in reports:
        if not r.passed and r.failed_link:
            log.warning("%s: failing link %s", r.id, r.failed_link)
    _emit(out, args.format, obj, [_report_row(r) for r in reports], _REPORT_HEADER)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_congruence(args, out) -> int:
    if args.eq17:
        rep = congruences.verify_ramanujan_17(args.n_max)
    elif args.eq110:
        rep = congruences.verify_eq_110(args.n_max)
    else:
        rep = congruences.verify_family_19(args.k, args.n_max, order_cap=args.order_cap, max_k=args.max_k)
        if args.k == 0:
            log.info("k = 0 compares b(9n+6) with itself and holds trivially")
    first = rep.failures[0] if rep.failures else ("", "", "")
    row = [rep.name, rep.relation, rep.n_max, rep.order, rep.status, *first, f"{rep.millis:.1f}"]
    header = ["name", "relation", "n_max", "order", "status", "n", "lhs", "rhs", "millis"]
    _emit(out, args.format, rep.to_dict(), [row], header)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_search(args, out) -> int:
    expr = parse_expr(args.expr)
    found = congruences.scan_progressions(expr, args.modulus, args.step, args.n_max)
    obj = {
        "expr": pretty(expr),
        "modulus": args.modulus,
        "step": args.step,
        "n_max": args.n_max,
        "candidates": found,
        "note": "candidates only: coefficients vanish for n <= n_max, not proven for all n",
    }
    rows = [[r, f"[q^({args.step}n+{r})] = 0 mod {args.modulus} for n <= {args.n_max} (candidate)"] for r in found]
    _emit(out, args.format, obj, rows, ["residue", "observation"])
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "congruence": cmd_congruence,
    "search": cmd_search,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = "table" if out.isatty() else "json"
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s: %(message)s", stream=sys.stderr
    )
    config = RunConfig(
        subcommand=args.subcommand,
        order=getattr(args, "order", 500),
        modulus=getattr(args, "modulus", None),
        format=args.format,
        identity=getattr(args, "identity", None),
        k=getattr(args, "k", None),
        n_max=getattr(args, "n_max", None),
        verbosity=args.verbose,
    )
    log.debug("%s", config)
    try:
        return COMMANDS[config.subcommand](args, out)
    except (ParseError, SeriesError, identities.IdentityError, congruences.OrderCapError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"qdissect: error: {msg}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
