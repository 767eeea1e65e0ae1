"""Range verification with cap deepening, certificates, and re-checking.

verify_range sweeps every n in a range.  Each target is searched under a
small prime cap first; failures retry under geometrically larger caps up
to a hard maximum, and the certificate records the first (smallest)
round cap that produced a witness.  Only a failure at the maximum cap is
reported as exhausted, and even that is a statement about the cap, not
about n.

Certificates serialise one JSON object per line so huge sweeps can be
streamed, appended, and re-checked with line tools.  check_certificates
is the audit path: it re-validates each line using only the
representation checker, sharing no code with the search that produced
the certificate.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import OutOfRangeError, UsageError
from .forms import (
    ConstraintMode,
    FormSpec,
    Representation,
    make_form,
    parity_feasible,
    rep_text,
    validate,
)
from .primes import PrimeTable, build_table
from .search import SearchBudget, find_witness

__all__ = [
    "VerifyPolicy",
    "Certificate",
    "Outcome",
    "VerificationReport",
    "CertCheck",
    "verify_range",
    "check_certificates",
    "CERTIFIED",
    "EXHAUSTED",
    "PARITY_SKIP",
]

CERTIFIED = "certificate"
EXHAUSTED = "exhausted"
PARITY_SKIP = "parity-infeasible"


@dataclass(frozen=True)
class VerifyPolicy:
    """Cap schedule for one sweep: start small, grow, stop at max_cap."""

    initial_cap: int = 100
    max_cap: int = 1_000_000
    growth: int = 2

    def __post_init__(self) -> None:
        if self.initial_cap < 1:
            raise UsageError(f"initial cap must be positive, got {self.initial_cap}")
        if self.max_cap < self.initial_cap:
            raise UsageError(
                f"max cap {self.max_cap} is below the initial cap {self.initial_cap}"
            )
        if self.growth < 2:
            raise UsageError(f"growth factor must be at least 2, got {self.growth}")

    def round_caps(self) -> tuple[int, ...]:
        """Ascending caps tried per target; the last is exactly max_cap."""
        caps = []
        cap = self.initial_cap
        while cap < self.max_cap:
            caps.append(cap)
            cap *= self.growth
        caps.append(self.max_cap)
        return tuple(caps)


@dataclass(frozen=True)
class Certificate:
    """One verified target: the witness plus the smallest round cap used."""

    n: int
    form: FormSpec
    mode: ConstraintMode
    representation: Representation
    cap_used: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.form.k,
                "s": self.form.s,
                "mode": self.mode.value,
                "pos": list(self.representation.positives),
                "neg": list(self.representation.negatives),
                "cap_used": self.cap_used,
            }
        )


@dataclass(frozen=True)
class Outcome:
    """Per-target verdict: certified, exhausted at max cap, or parity skip."""

    n: int
    kind: str
    certificate: Certificate | None = None


@dataclass(frozen=True)
class VerificationReport:
    """Everything one sweep produced, with outcomes sorted by n."""

    form: FormSpec
    mode: ConstraintMode
    policy: VerifyPolicy
    n_lo: int
    n_hi: int
    outcomes: tuple[Outcome, ...]

    @property
    def num_certified(self) -> int:
        return sum(1 for o in self.outcomes if o.kind == CERTIFIED)

    @property
    def num_exhausted(self) -> int:
        return sum(1 for o in self.outcomes if o.kind == EXHAUSTED)

    @property
    def num_parity_skipped(self) -> int:
        return sum(1 for o in self.outcomes if o.kind == PARITY_SKIP)

    def certificates(self) -> tuple[Certificate, ...]:
        return tuple(o.certificate for o in self.outcomes if o.certificate)

    def certificates_jsonl(self) -> str:
        """One JSON object per certified target, newline-terminated."""
        return "".join(cert.to_json() + "\n" for cert in self.certificates())

    def summary_csv(self) -> str:
        """Delimited per-target summary: n, outcome, witness, cap used."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "outcome", "witness", "cap_used"])
        for outcome in self.outcomes:
            if outcome.certificate is not None:
                writer.writerow(
                    [
                        outcome.n,
                        outcome.kind,
                        rep_text(outcome.certificate.representation),
                        outcome.certificate.cap_used,
                    ]
                )
            elif outcome.kind == EXHAUSTED:
                writer.writerow([outcome.n, outcome.kind, "", self.policy.max_cap])
            else:
                writer.writerow([outcome.n, outcome.kind, "", ""])
        return buf.getvalue()


def _resolve(
    n: int,
    form: FormSpec,
    mode: ConstraintMode,
    policy: VerifyPolicy,
    table: PrimeTable,
) -> Outcome:
    """Run the cap schedule for one target."""
    if not parity_feasible(n, form, table.two_included):
        return Outcome(n, PARITY_SKIP)
    for cap in policy.round_caps():
        found = find_witness(n, form, mode, SearchBudget(cap, table))
        if isinstance(found, Representation):
            return Outcome(n, CERTIFIED, Certificate(n, form, mode, found, cap))
    return Outcome(n, EXHAUSTED)


def _table_limit(n_lo: int, n_hi: int, form: FormSpec, policy: VerifyPolicy) -> int:
    # Large enough that every member and every fast-path lookup stays inside.
    return max(abs(n_lo), abs(n_hi)) + form.k * policy.max_cap


_WORKER: dict | None = None


def _worker_init(limit, include_two, form, mode, policy) -> None:
    global _WORKER
    table = build_table(limit, include_two=include_two)
    _WORKER = {"table": table, "form": form, "mode": mode, "policy": policy}


def _worker_chunk(bounds: tuple[int, int]) -> list[Outcome]:
    lo, hi = bounds
    state = _WORKER
    return [
        _resolve(n, state["form"], state["mode"], state["policy"], state["table"])
        for n in range(lo, hi + 1)
    ]


def verify_range(
    n_lo: int,
    n_hi: int,
    form: FormSpec,
    mode: ConstraintMode,
    policy: VerifyPolicy,
    jobs: int = 1,
    include_two: bool = False,
) -> VerificationReport:
    """Sweep [n_lo, n_hi] and certify every target the policy can reach.

    With jobs > 1 the range is split into contiguous chunks handled by
    worker processes; outcomes are reassembled in target order afterwards,
    so the report is byte-identical whatever the worker count.
    """
    if n_lo > n_hi:
        raise UsageError(f"empty target range: {n_lo} > {n_hi}")
    if jobs < 1:
        raise UsageError(f"jobs must be positive, got {jobs}")
    limit = _table_limit(n_lo, n_hi, form, policy)

    if jobs == 1:
        table = build_table(limit, include_two=include_two)
        outcomes = [_resolve(n, form, mode, policy, table) for n in range(n_lo, n_hi + 1)]
    else:
        chunks = _chunk_bounds(n_lo, n_hi, jobs)
        with ProcessPoolExecutor(
            max_workers=jobs,
            initializer=_worker_init,
            initargs=(limit, include_two, form, mode, policy),
        ) as pool:
            pieces = list(pool.map(_worker_chunk, chunks))
        outcomes = [outcome for piece in pieces for outcome in piece]
        outcomes.sort(key=lambda outcome: outcome.n)

    return VerificationReport(form, mode, policy, n_lo, n_hi, tuple(outcomes))


def _chunk_bounds(n_lo: int, n_hi: int, jobs: int) -> list[tuple[int, int]]:
    total = n_hi - n_lo + 1
    size = max(1, -(-total // (jobs * 4)))
    bounds = []
    lo = n_lo
    while lo <= n_hi:
        hi = min(lo + size - 1, n_hi)
        bounds.append((lo, hi))
        lo = hi + 1
    return bounds


# --- certificate re-checking ------------------------------------------------

PARSE_ERROR = "ParseError"
CAP_EXCEEDED = "CapExceeded"
OUT_OF_RANGE = "OutOfRange"

_CERT_FIELDS = frozenset({"n", "k", "s", "mode", "pos", "neg", "cap_used"})
_MODE_BY_VALUE = {mode.value: mode for mode in ConstraintMode}


@dataclass(frozen=True)
class CertCheck:
    """Verdict for one certificate line."""

    line_number: int
    accepted: bool
    reasons: tuple[str, ...] = ()
    n: int | None = None


class _ParseFailure(Exception):
    pass


def _as_int(value) -> int:
    # bool is an int subclass; JSON true/false must not sneak through.
    if isinstance(value, bool) or not isinstance(value, int):
        raise _ParseFailure("expected an integer")
    return value


def _as_members(value) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise _ParseFailure("expected a list of integers")
    members = tuple(_as_int(m) for m in value)
    if any(a > b for a, b in zip(members, members[1:])):
        raise _ParseFailure("members must be ascending")
    return members


def _parse_certificate(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _ParseFailure(str(exc)) from None
    if not isinstance(obj, dict) or set(obj) != _CERT_FIELDS:
        raise _ParseFailure("wrong field set")
    n = _as_int(obj["n"])
    cap_used = _as_int(obj["cap_used"])
    mode = _MODE_BY_VALUE.get(obj["mode"])
    if mode is None:
        raise _ParseFailure(f"unknown mode {obj['mode']!r}")
    try:
        form = make_form(_as_int(obj["k"]), _as_int(obj["s"]))
    except UsageError as exc:
        raise _ParseFailure(str(exc)) from None
    rep = Representation(_as_members(obj["pos"]), _as_members(obj["neg"]))
    return n, form, mode, rep, cap_used


def check_certificates(lines, table: PrimeTable) -> list[CertCheck]:
    """Re-validate certificate lines independently of any search state.

    Each non-blank line is parsed and its representation re-checked with
    validate() alone.  Rejection reasons are the validation failure codes,
    plus ParseError for malformed lines, CapExceeded when a member is
    larger than the recorded cap_used, and OutOfRange when a member cannot
    be answered by the supplied table.
    """
    results = []
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            n, form, mode, rep, cap_used = _parse_certificate(text)
        except _ParseFailure:
            results.append(CertCheck(line_number, False, (PARSE_ERROR,)))
            continue
        if any(m > cap_used for m in rep.positives + rep.negatives):
            results.append(CertCheck(line_number, False, (CAP_EXCEEDED,), n))
            continue
        try:
            report = validate(rep, n, form, mode, table)
        except OutOfRangeError:
            results.append(CertCheck(line_number, False, (OUT_OF_RANGE,), n))
            continue
        results.append(CertCheck(line_number, report.valid, report.failures, n))
    return results
