"""Witness search, exhaustive enumeration, and counting under a prime cap.

Results follow one deterministic order everywhere: subtracted multisets
ascend lexicographically (as sorted tuples), and for each of them the
added multisets reaching the required sum ascend lexicographically too.
"The" witness for n is simply the first entry of that sequence, so two
runs, or two differently parallelised runs, always agree.

A cap bounds the prime values tried, nothing else.  Exhausting it means
"no representation with primes <= cap", never "no representation".
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator, Union

from .errors import UsageError
from .forms import (
    ConstraintMode,
    FormSpec,
    Representation,
    constraint_satisfied,
    parity_feasible,
    validate,
)
from .primes import PrimeTable, primes_up_to

__all__ = [
    "SearchBudget",
    "NotFound",
    "PARITY_INFEASIBLE",
    "CAP_EXHAUSTED",
    "find_witness",
    "enumerate_reps",
    "count_reps",
    "oracle_count",
]

PARITY_INFEASIBLE = "ParityInfeasible"
CAP_EXHAUSTED = "CapExhausted"


@dataclass(frozen=True)
class SearchBudget:
    """How far a search may reach: primes up to ``cap``, answered by ``table``."""

    cap: int
    table: PrimeTable

    def __post_init__(self) -> None:
        if self.cap < 1:
            raise UsageError(f"cap must be positive, got {self.cap}")
        if self.cap > self.table.limit:
            raise UsageError(
                f"cap {self.cap} exceeds the sieved limit {self.table.limit}"
            )


@dataclass(frozen=True)
class NotFound:
    """Search verdict when no witness was produced; never a refutation."""

    reason: str

    def __str__(self) -> str:
        return f"NotFound({self.reason})"


SearchResult = Union[Representation, NotFound]


def _sum_multisets(
    primes: tuple[int, ...], size: int, total: int, min_index: int
) -> Iterator[tuple[int, ...]]:
    """Nondecreasing size-tuples over primes[min_index:] summing to total.

    Yields in ascending lexicographic order.  Pruning only skips prefixes
    that cannot reach the total, so the order is exactly the order of the
    unpruned enumeration.
    """
    if size == 1:
        i = bisect_left(primes, total)
        if min_index <= i < len(primes) and primes[i] == total:
            yield (total,)
        return
    top = primes[-1]
    start = bisect_left(primes, total - (size - 1) * top, min_index)
    for i in range(start, len(primes)):
        p = primes[i]
        if p * size > total:
            break
        for rest in _sum_multisets(primes, size - 1, total - p, i):
            yield (p, *rest)


def _bounded_multisets(
    primes: tuple[int, ...], size: int, lo_sum: int, hi_sum: int, min_index: int = 0
) -> Iterator[tuple[int, ...]]:
    """Nondecreasing size-tuples with sum in [lo_sum, hi_sum], lex order."""
    if size == 0:
        if lo_sum <= 0 <= hi_sum:
            yield ()
        return
    top = primes[-1]
    start = bisect_left(primes, lo_sum - (size - 1) * top, min_index)
    for i in range(start, len(primes)):
        p = primes[i]
        if p * size > hi_sum:
            break
        for rest in _bounded_multisets(primes, size - 1, lo_sum - p, hi_sum - p, i):
            yield (p, *rest)


def _iter_reps(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> Iterator[Representation]:
    """All representations of n under the budget, in the canonical order."""
    table = budget.table
    if not parity_feasible(n, form, table.two_included):
        return
    primes = primes_up_to(budget.cap, table)
    if not primes:
        return
    added, s = form.positives_count, form.s
    low, high = primes[0], primes[-1]
    # The added side must sum to n + sum(neg), which pins a window for the
    # subtracted side: added * low <= n + sum(neg) <= added * high.
    neg_lo = max(s * low, added * low - n)
    neg_hi = min(s * high, added * high - n)
    if neg_lo > neg_hi:
        return
    for negatives in _bounded_multisets(primes, s, neg_lo, neg_hi):
        target = n + sum(negatives)
        for positives in _sum_multisets(primes, added, target, 0):
            if constraint_satisfied(positives, negatives, form, mode):
                yield Representation(positives, negatives)


def enumerate_reps(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> list[Representation]:
    """Every representation of n with primes <= cap, canonically ordered."""
    return list(_iter_reps(n, form, mode, budget))


def find_witness(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> SearchResult:
    """First representation in the canonical order, or a typed NotFound."""
    if not parity_feasible(n, form, budget.table.two_included):
        return NotFound(PARITY_INFEASIBLE)
    shape = (form.k, form.s)
    if shape == (3, 1):
        found = _witness_three_one(n, mode, budget)
    elif shape == (3, 2):
        found = _witness_three_two(n, form, mode, budget)
    else:
        found = next(_iter_reps(n, form, mode, budget), None)
    if found is None:
        return NotFound(CAP_EXHAUSTED)
    return found


def _witness_three_one(
    n: int, mode: ConstraintMode, budget: SearchBudget
) -> Representation | None:
    """(3, 1) fast path: scan r, then split n + r into p + q by table lookup.

    Visits candidates in exactly the canonical order (r ascending, then p
    ascending with q determined), so it returns the same witness the
    generic enumeration would.
    """
    primes = primes_up_to(budget.cap, budget.table)
    if not primes:
        return None
    bits = budget.table.primality
    low, high = primes[0], primes[-1]
    distinct = mode is ConstraintMode.ALL_DISTINCT
    unconstrained = mode is ConstraintMode.UNCONSTRAINED
    for r in primes:
        target = n + r
        if target < 2 * low:
            continue
        if target > 2 * high:
            break
        start = bisect_left(primes, target - high)
        for i in range(start, len(primes)):
            p = primes[i]
            if 2 * p > target:
                break
            q = target - p
            if not bits[q]:
                continue
            if unconstrained:
                return Representation((p, q), (r,))
            if distinct and p == q:
                continue
            # LITERAL and DISJOINT agree here: r must not reappear.
            if r == p or r == q:
                continue
            return Representation((p, q), (r,))
    return None


def _witness_three_two(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> Representation | None:
    """(3, 2) fast path: scan subtracted pairs, test p = n + q + r by lookup."""
    primes = primes_up_to(budget.cap, budget.table)
    if not primes:
        return None
    bits = budget.table.primality
    low, high = primes[0], primes[-1]
    for negatives in _bounded_multisets(primes, 2, low - n, high - n):
        p = n + negatives[0] + negatives[1]
        if not bits[p]:
            continue
        if constraint_satisfied((p,), negatives, form, mode):
            return Representation((p,), negatives)
    return None


def count_reps(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> int:
    """Number of representations, computed by a sum-indexed join.

    Subtracted multisets are grouped by their sum first; each group is then
    paired with the added multisets hitting n + sum once, instead of once
    per group member.  Agrees with len(enumerate_reps(...)) by
    construction and is checked against oracle_count in the tests.
    """
    table = budget.table
    if not parity_feasible(n, form, table.two_included):
        return 0
    primes = primes_up_to(budget.cap, table)
    if not primes:
        return 0
    added, s = form.positives_count, form.s
    low, high = primes[0], primes[-1]
    neg_lo = max(s * low, added * low - n)
    neg_hi = min(s * high, added * high - n)
    if neg_lo > neg_hi:
        return 0
    by_sum: dict[int, list[tuple[int, ...]]] = {}
    for negatives in _bounded_multisets(primes, s, neg_lo, neg_hi):
        by_sum.setdefault(sum(negatives), []).append(negatives)
    total = 0
    unconstrained = mode is ConstraintMode.UNCONSTRAINED
    for neg_sum, group in by_sum.items():
        for positives in _sum_multisets(primes, added, n + neg_sum, 0):
            if unconstrained:
                total += len(group)
            else:
                for negatives in group:
                    if constraint_satisfied(positives, negatives, form, mode):
                        total += 1
    return total


def oracle_count(
    n: int, form: FormSpec, mode: ConstraintMode, budget: SearchBudget
) -> int:
    """Reference count: try every multiset pair and validate each one.

    Deliberately naive.  No parity shortcut, no sum windows, no joins; the
    only shared logic is validate() itself.  Meant as the ground truth the
    clever counters are tested against, and usable only at small caps.
    """
    table = budget.table
    primes = primes_up_to(budget.cap, table)
    rep = Representation
    check = validate
    total = 0
    for positives in combinations_with_replacement(primes, form.positives_count):
        for negatives in combinations_with_replacement(primes, form.s):
            if check(rep(positives, negatives), n, form, mode, table).valid:
                total += 1
    return total
