"""The ``cml`` command line.

Every command prints one JSON document with top-level keys ``command``,
``params``, ``results`` and ``status`` (plus ``meta`` unless ``--no-meta``),
or a CSV table for ``--format csv``.  The exit code is 0 iff the status is
``"ok"``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .crystal import (
    CensusOverflow,
    check_grid_params,
    enumerate_Z,
    format_alpha_weight,
    lambda_mu_weight,
    weight_multiplicity,
)
from .qcount import cyclotomic_eval, dominant_maximal_weights, enumerate_S, format_qpoly, qbinom, totient_count
from .verify import SUITES, run_suite
from .words import (
    count_avoiding_involutions,
    count_avoiding_shuffles,
    enumerate_shuffles,
    format_word,
    lds_length,
)

MAXWEIGHT_COLUMNS = ["index", "x", "coeffs", "weight"]
VERIFY_COLUMNS = ["params", "values", "agree"]


class CommandError(Exception):
    pass


def _vec(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


def cmd_mult(args) -> tuple[dict, dict, str]:
    params = {"p": args.p, "k": args.k, "s": args.s, "ell": args.ell}
    try:
        check_grid_params(args.p, args.k, args.s, args.ell)
    except ValueError as exc:
        raise CommandError(str(exc))
    target = lambda_mu_weight(args.p, args.ell, args.s)
    res = {
        "multiplicity": weight_multiplicity(args.p, args.k, args.s, target),
        "z_count": len(enumerate_Z(args.p, args.k, args.s, args.ell)),
        "shuffle_count": count_avoiding_shuffles(args.s, args.ell, args.k),
    }
    res["agree"] = res["multiplicity"] == res["z_count"] == res["shuffle_count"]
    return params, res, "ok" if res["agree"] else "failed"


def cmd_verify(args) -> tuple[dict, dict, str]:
    params = {"suite": args.suite, "max_p": args.max_p, "max_k": args.max_k,
              "max_n": args.max_n, "max_d": args.max_d}
    params = {k: v for k, v in params.items() if v is not None}
    report = run_suite(args.suite, args.max_p, args.max_k, args.max_n, args.max_d)
    args._wall = report.wall_time
    return params, report.as_dict(), report.status


def maxweight_rows(p: int, s: int, k: int) -> list[dict]:
    rows = []
    for idx, (x, w) in enumerate(zip(enumerate_S(p, s, k + 1), dominant_maximal_weights(p, s, k))):
        rows.append({"index": idx, "x": _vec(x), "coeffs": _vec(w.coeffs), "weight": format_alpha_weight(w)})
    return rows


def cmd_maxweights(args) -> tuple[dict, dict, str]:
    params = {"p": args.p, "s": args.s, "k": args.k}
    if args.p < 2 or args.k < 1 or not 0 <= args.s < args.p:
        raise CommandError(f"need p >= 2, k >= 1, 0 <= s < p; got p={args.p}, s={args.s}, k={args.k}")
    rows = maxweight_rows(args.p, args.s, args.k)
    res: dict = {"count": len(rows), "rows": rows}
    status = "ok"
    if args.s == 0:
        res["totient_count"] = totient_count(args.p, args.k + 1)
        if res["totient_count"] != len(rows):
            status = "failed"
    return params, res, status


def cmd_involutions(args) -> tuple[dict, dict, str]:
    params = {"ell": args.ell, "k": args.k}
    if args.ell < 0 or args.k < 1:
        raise CommandError(f"need ell >= 0 and k >= 1, got ell={args.ell}, k={args.k}")
    formula = count_avoiding_involutions(args.ell, args.k, "formula")
    res = {"formula": formula}
    if args.ell <= 10:
        res["brute_force"] = count_avoiding_involutions(args.ell, args.k, "brute")
    res["agree"] = res.get("brute_force", formula) == formula
    return params, res, "ok" if res["agree"] else "failed"


def cmd_shuffles(args) -> tuple[dict, dict, str]:
    params = {"s": args.s, "ell": args.ell, "k": args.k}
    if args.s < 0 or args.ell < 1 or args.k < 1:
        raise CommandError(f"need s >= 0, ell >= 1, k >= 1; got s={args.s}, ell={args.ell}, k={args.k}")
    words = enumerate_shuffles(args.s, args.ell)
    good = [format_word(w) for w in words if lds_length(w) <= args.k + 1]
    return params, {"total": len(words), "avoiding": len(good), "words": good}, "ok"


def cmd_qbinom(args) -> tuple[dict, dict, str]:
    params = {"a": args.a, "b": args.b}
    if not 0 <= args.b <= args.a:
        raise CommandError(f"need 0 <= b <= a, got a={args.a}, b={args.b}")
    f = qbinom(args.a, args.b)
    res = {"poly": format_qpoly(f), "coeffs": list(f.coeffs)}
    if args.d is not None:
        if args.d < 1:
            raise CommandError(f"d must be >= 1, got {args.d}")
        params["d"] = args.d
        res["at_root"] = format_qpoly(cyclotomic_eval(f, args.d))
    return params, res, "ok"


COMMANDS = {
    "mult": cmd_mult,
    "verify": cmd_verify,
    "maxweights": cmd_maxweights,
    "involutions": cmd_involutions,
    "shuffles": cmd_shuffles,
    "qbinom": cmd_qbinom,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cml", description="Maximal-weight multiplicities and their combinatorial models.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, csv_ok=False):
        sp.add_argument("--no-meta", action="store_true", help="omit the wall-time metadata")
        sp.add_argument("--format", choices=["json", "csv"] if csv_ok else ["json"], default="json")

    sp = sub.add_parser("mult", help="multiplicity of Lambda - lambda^p_{ell,s} by three routes")
    for name in ("p", "k", "s", "ell"):
        sp.add_argument(f"--{name}", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify", help="run a verification grid")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max-p", type=int)
    sp.add_argument("--max-k", type=int)
    sp.add_argument("--max-n", type=int, help="q-lucas: largest n")
    sp.add_argument("--max-d", type=int, help="q-lucas: largest root order d")
    common(sp, csv_ok=True)

    sp = sub.add_parser("maxweights", help="dominant maximal weights of k*L0 + Ls")
    for name in ("p", "s", "k"):
        sp.add_argument(f"--{name}", type=int, required=True)
    common(sp, csv_ok=True)

    sp = sub.add_parser("involutions", help="involutions avoiding (k+2,...,1)")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)

    sp = sub.add_parser("shuffles", help="shuffles of 0^s,1..ell avoiding (k+2,...,1)")
    for name in ("s", "ell", "k"):
        sp.add_argument(f"--{name}", type=int, required=True)
    common(sp)

    sp = sub.add_parser("qbinom", help="Gaussian binomial [a, b], optionally at a root of unity")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--d", type=int)
    common(sp)
    return parser


def _csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args._wall = None
    start = time.perf_counter()
    try:
        params, results, status = COMMANDS[args.command](args)
        doc = {"command": args.command, "params": params, "results": results, "status": status}
    except (CommandError, CensusOverflow) as exc:
        params = {
            k: v for k, v in vars(args).items()
            if not k.startswith("_") and k not in ("command", "no_meta", "format") and v is not None
        }
        doc = {"command": args.command, "params": params, "results": None, "status": "error", "error": str(exc)}
    if not args.no_meta:
        doc["meta"] = {"wall_time": round(args._wall if args._wall is not None else time.perf_counter() - start, 6)}

    if args.format == "csv" and doc["status"] != "error":
        if args.command == "maxweights":
            sys.stdout.write(_csv(doc["results"]["rows"], MAXWEIGHT_COLUMNS))
            if "totient_count" in doc["results"]:
                print(f"totient_count={doc['results']['totient_count']}", file=sys.stderr)
        else:
            rows = [
                {"params": json.dumps(c["params"], sort_keys=True), "values": json.dumps(c["values"], sort_keys=True),
                 "agree": str(c["agree"]).lower()}
                for c in doc["results"]["cases"]
            ]
            sys.stdout.write(_csv(rows, VERIFY_COLUMNS))
    else:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0 if doc["status"] == "ok" else (2 if doc["status"] == "error" else 1)


def parse_maxweights_csv(text: str) -> list[dict]:
    """Read back a ``maxweights --format csv`` table."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != MAXWEIGHT_COLUMNS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    rows = list(reader)
    for r in rows:
        r["index"] = int(r["index"])
    return rows


if __name__ == "__main__":
    sys.exit(main())
