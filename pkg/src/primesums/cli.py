"""Command line front end.

Subcommands mirror the library: witness, count, enumerate, verify,
table, check-cert.  Results go to stdout (or --output); diagnostics and
scope notes go to stderr so the data stream stays clean.  Exit codes:
0 on success, 1 when a search came up empty (witness not found, or a
sweep left exhausted targets, or a certificate was rejected), 2 on bad
usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .counting import count_unconstrained, counting_table
from .errors import OutOfRangeError, UsageError
from .forms import ConstraintMode, make_form, rep_text
from .primes import build_table
from .search import SearchBudget, NotFound, count_reps, enumerate_reps, find_witness
from .verify import EXHAUSTED, VerifyPolicy, check_certificates, verify_range

__all__ = ["run", "main"]

_MODE_VALUES = [mode.value for mode in ConstraintMode]


def _add_form_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="total primes in the form")
    parser.add_argument("--s", type=int, required=True, help="how many of them are subtracted")
    parser.add_argument(
        "--mode",
        choices=_MODE_VALUES,
        default=ConstraintMode.DISJOINT.value,
        help="side condition on the primes (default: disjoint)",
    )
    parser.add_argument(
        "--allow-two",
        action="store_true",
        help="let the prime 2 participate (default: odd primes only)",
    )


def _add_io_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=["csv", "json"],
        default="csv",
        help="csv for delimited/plain lines, json for one object per line",
    )
    parser.add_argument("--output", help="write results to this file instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primesums",
        description="Search, count and verify signed prime partitions n = p1+...-q1-...",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", help="find the first representation of one target")
    _add_form_args(p)
    p.add_argument("--n", type=int, required=True, help="target value")
    p.add_argument("--cap", type=int, default=1000, help="largest prime tried (default 1000)")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("count", help="count the representations of one target")
    _add_form_args(p)
    p.add_argument("--n", type=int, required=True, help="target value")
    p.add_argument("--cap", type=int, default=1000, help="largest prime counted (default 1000)")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("enumerate", help="list every representation of one target")
    _add_form_args(p)
    p.add_argument("--n", type=int, required=True, help="target value")
    p.add_argument("--cap", type=int, default=1000, help="largest prime tried (default 1000)")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", help="sweep a target range with cap deepening")
    _add_form_args(p)
    p.add_argument("--lo", type=int, required=True, help="first target")
    p.add_argument("--hi", type=int, required=True, help="last target")
    p.add_argument("--initial-cap", type=int, default=100, help="first round cap (default 100)")
    p.add_argument(
        "--max-cap", type=int, default=1_000_000, help="final round cap (default 1000000)"
    )
    p.add_argument("--growth", type=int, default=2, help="cap growth factor (default 2)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--certs", help="also write certificates to this JSONL file")
    _add_io_args(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="tabulate counts over a target range")
    _add_form_args(p)
    p.add_argument("--lo", type=int, required=True, help="first target")
    p.add_argument("--hi", type=int, required=True, help="last target")
    p.add_argument(
        "--caps",
        default="1000",
        help="comma-separated ascending caps, one column group per cap (default 1000)",
    )
    _add_io_args(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("check-cert", help="re-validate a certificate file")
    p.add_argument("certificates", help="JSONL certificate file, or - for stdin")
    p.add_argument(
        "--max-cap",
        type=int,
        default=1_000_000,
        help="sieve limit for re-checking members (default 1000000)",
    )
    _add_io_args(p)
    p.set_defaults(handler=_cmd_check_cert)

    return parser


@contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _note(text: str) -> None:
    print(f"note: {text}", file=sys.stderr)


def _scope_notes(form, targets) -> None:
    # The classic statements subtract at least one prime and aim at n >= 1;
    # anything else is an extension we compute exactly but flag.
    if form.s == 0:
        _note("s=0 requests a plain sum of primes, outside the classic signed forms")
    if any(n <= 0 for n in targets):
        _note("targets below 1 lie outside the classic signed forms")


def _cmd_witness(args) -> int:
    form = make_form(args.k, args.s)
    mode = ConstraintMode(args.mode)
    _scope_notes(form, (args.n,))
    table = build_table(max(2, args.cap), include_two=args.allow_two)
    found = find_witness(args.n, form, mode, SearchBudget(args.cap, table))
    hit = not isinstance(found, NotFound)
    with _open_out(args.output) as fh:
        if args.format == "json":
            payload = {
                "n": args.n,
                "k": form.k,
                "s": form.s,
                "mode": mode.value,
                "cap": args.cap,
                "found": hit,
                "pos": list(found.positives) if hit else None,
                "neg": list(found.negatives) if hit else None,
                "reason": None if hit else found.reason,
            }
            fh.write(json.dumps(payload) + "\n")
        else:
            fh.write((rep_text(found) if hit else str(found)) + "\n")
    return 0 if hit else 1


def _cmd_count(args) -> int:
    form = make_form(args.k, args.s)
    mode = ConstraintMode(args.mode)
    _scope_notes(form, (args.n,))
    table = build_table(max(2, args.cap), include_two=args.allow_two)
    if mode is ConstraintMode.UNCONSTRAINED:
        count = count_unconstrained(args.n, form, args.cap, table)
    else:
        count = count_reps(args.n, form, mode, SearchBudget(args.cap, table))
    with _open_out(args.output) as fh:
        if args.format == "json":
            payload = {
                "n": args.n,
                "k": form.k,
                "s": form.s,
                "mode": mode.value,
                "cap": args.cap,
                "count": count,
            }
            fh.write(json.dumps(payload) + "\n")
        else:
            fh.write(f"{count}\n")
    return 0


def _cmd_enumerate(args) -> int:
    form = make_form(args.k, args.s)
    mode = ConstraintMode(args.mode)
    _scope_notes(form, (args.n,))
    table = build_table(max(2, args.cap), include_two=args.allow_two)
    reps = enumerate_reps(args.n, form, mode, SearchBudget(args.cap, table))
    with _open_out(args.output) as fh:
        for rep in reps:
            if args.format == "json":
                fh.write(
                    json.dumps({"pos": list(rep.positives), "neg": list(rep.negatives)})
                    + "\n"
                )
            else:
                fh.write(rep_text(rep) + "\n")
    print(f"{len(reps)} representation(s)", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    form = make_form(args.k, args.s)
    mode = ConstraintMode(args.mode)
    _scope_notes(form, (args.lo, args.hi))
    policy = VerifyPolicy(args.initial_cap, args.max_cap, args.growth)
    report = verify_range(
        args.lo, args.hi, form, mode, policy, jobs=args.jobs, include_two=args.allow_two
    )
    with _open_out(args.output) as fh:
        if args.format == "json":
            for outcome in report.outcomes:
                cert = outcome.certificate
                row = {
                    "n": outcome.n,
                    "outcome": outcome.kind,
                    "witness": rep_text(cert.representation) if cert else None,
                    "cap_used": cert.cap_used
                    if cert
                    else (policy.max_cap if outcome.kind == EXHAUSTED else None),
                }
                fh.write(json.dumps(row) + "\n")
        else:
            fh.write(report.summary_csv())
    if args.certs:
        with open(args.certs, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.certificates_jsonl())
    print(
        f"certified {report.num_certified}, exhausted {report.num_exhausted}, "
        f"parity-skipped {report.num_parity_skipped}",
        file=sys.stderr,
    )
    return 1 if report.num_exhausted else 0


def _parse_caps(text: str) -> list[int]:
    try:
        caps = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"could not parse cap list {text!r}") from None
    if not caps:
        raise UsageError("cap list is empty")
    return caps


def _cmd_table(args) -> int:
    form = make_form(args.k, args.s)
    mode = ConstraintMode(args.mode)
    _scope_notes(form, (args.lo, args.hi))
    caps = _parse_caps(args.caps)
    table = build_table(max(2, max(caps)), include_two=args.allow_two)
    rows = counting_table(args.lo, args.hi, form, mode, caps, table)
    with _open_out(args.output) as fh:
        if args.format == "json":
            for row in rows:
                fh.write(
                    json.dumps({"n": row.n, "cap": row.cap, "count": row.count}) + "\n"
                )
        else:
            fh.write("n,cap,count\n")
            for row in rows:
                fh.write(f"{row.n},{row.cap},{row.count}\n")
    return 0


def _cmd_check_cert(args) -> int:
    if args.certificates == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.certificates, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    table = build_table(max(2, args.max_cap))
    results = check_certificates(lines, table)
    with _open_out(args.output) as fh:
        if args.format == "json":
            for result in results:
                row = {
                    "line": result.line_number,
                    "n": result.n,
                    "accepted": result.accepted,
                    "reasons": list(result.reasons),
                }
                fh.write(json.dumps(row) + "\n")
        else:
            fh.write("line,n,status,reasons\n")
            for result in results:
                status = "accepted" if result.accepted else "rejected"
                n_text = "" if result.n is None else str(result.n)
                fh.write(f"{result.line_number},{n_text},{status},{'|'.join(result.reasons)}\n")
    rejected = sum(1 for result in results if not result.accepted)
    print(f"checked {len(results)}, rejected {rejected}", file=sys.stderr)
    return 1 if rejected else 0


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (UsageError, OutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
