"""Exact representation counting through sum-distribution tables.

Without a side condition the added and subtracted sides of a
representation are independent, so counting factors through the
distribution of reachable sums: with T_j(x) = number of size-j prime
multisets summing to x, the representations of n under a (k, s) form
number sum_x T_{k-s}(x) * T_s(x - n).  Tables are built once by a
bounded knapsack recurrence and joined per target.  Every count is an
exact Python integer; nothing here rounds or approximates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import UsageError
from .forms import ConstraintMode, FormSpec, parity_feasible
from .primes import PrimeTable, primes_up_to
from .search import SearchBudget, count_reps

__all__ = [
    "SumTable",
    "TableRow",
    "build_sum_table",
    "count_unconstrained",
    "counting_table",
]


@dataclass(frozen=True)
class SumTable:
    """Distribution of sums of size-``j`` prime multisets with primes <= cap.

    ``counts[x]`` is the number of such multisets summing to x; sums that
    cannot occur are simply absent.
    """

    j: int
    cap: int
    counts: dict[int, int]

    def total(self) -> int:
        """Number of multisets covered; equals C(m + j - 1, j) for m primes."""
        return sum(self.counts.values())


def build_sum_table(j: int, cap: int, table: PrimeTable) -> SumTable:
    """Tabulate T_j over primes <= cap by an in-place knapsack recurrence."""
    if j < 1:
        raise UsageError(f"multiset size must be positive, got {j}")
    primes = primes_up_to(cap, table)
    width = j * primes[-1] if primes else 0
    rows = [[0] * (width + 1) for _ in range(j + 1)]
    rows[0][0] = 1
    for p in primes:
        # Ascending size with the previous row already updated for p lets a
        # prime repeat: each extra copy of p is one more step down this chain.
        for size in range(1, j + 1):
            prev = rows[size - 1]
            cur = rows[size]
            for total in range(p, width + 1):
                c = prev[total - p]
                if c:
                    cur[total] += c
    counts = {total: c for total, c in enumerate(rows[j]) if c}
    return SumTable(j, cap, counts)


def count_unconstrained(n: int, form: FormSpec, cap: int, table: PrimeTable) -> int:
    """Representation count for UNCONSTRAINED mode via the table join."""
    pos_table = build_sum_table(form.positives_count, cap, table)
    if form.s == 0:
        return pos_table.counts.get(n, 0)
    neg_table = build_sum_table(form.s, cap, table)
    return _join(pos_table.counts, neg_table.counts, n)


def _join(pos_counts: dict[int, int], neg_counts: dict[int, int], n: int) -> int:
    """sum_x pos[x] * neg[x - n], iterating over the smaller table."""
    if len(pos_counts) <= len(neg_counts):
        return sum(c * neg_counts.get(x - n, 0) for x, c in pos_counts.items())
    return sum(c * pos_counts.get(n + y, 0) for y, c in neg_counts.items())


class TableRow(NamedTuple):
    n: int
    cap: int
    count: int


def counting_table(
    n_lo: int,
    n_hi: int,
    form: FormSpec,
    mode: ConstraintMode,
    caps: Sequence[int],
    table: PrimeTable,
) -> list[TableRow]:
    """Counts for every feasible n in [n_lo, n_hi] and every cap, in order.

    Rows come out sorted by (n, cap).  Targets that fail the parity test
    are left out entirely rather than shown as zero, and an empty cap list
    yields an empty table.  UNCONSTRAINED counts reuse one SumTable pair
    per cap; the other modes fall back to the enumeration counter.
    """
    if n_lo > n_hi:
        raise UsageError(f"empty target range: {n_lo} > {n_hi}")
    caps = list(caps)
    if caps != sorted(set(caps)):
        raise UsageError("caps must be strictly ascending")
    if caps and caps[-1] > table.limit:
        raise UsageError(f"cap {caps[-1]} exceeds the sieved limit {table.limit}")

    joined = mode is ConstraintMode.UNCONSTRAINED
    tables: dict[int, tuple[dict[int, int], dict[int, int] | None]] = {}
    if joined:
        for cap in caps:
            pos_table = build_sum_table(form.positives_count, cap, table)
            neg_counts = (
                build_sum_table(form.s, cap, table).counts if form.s else None
            )
            tables[cap] = (pos_table.counts, neg_counts)

    rows = []
    for n in _feasible_targets(n_lo, n_hi, form, table):
        for cap in caps:
            if joined:
                pos_counts, neg_counts = tables[cap]
                if neg_counts is None:
                    count = pos_counts.get(n, 0)
                else:
                    count = _join(pos_counts, neg_counts, n)
            else:
                count = count_reps(n, form, mode, SearchBudget(cap, table))
            rows.append(TableRow(n, cap, count))
    return rows


def _feasible_targets(
    n_lo: int, n_hi: int, form: FormSpec, table: PrimeTable
) -> Iterator[int]:
    for n in range(n_lo, n_hi + 1):
        if parity_feasible(n, form, table.two_included):
            yield n
