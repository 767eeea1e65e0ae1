"""Signed partition forms, canonical representations, and validation.

A form (k, s) covers expressions built from k primes where s of them are
subtracted: n = p_1 + ... + p_{k-s} - q_1 - ... - q_s.  A representation
stores the added and subtracted primes as multisets in canonical
(ascending) order, so each solution has exactly one encoding and slot
order never matters.  All functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .errors import OutOfRangeError, UsageError
from .primes import PrimeTable

__all__ = [
    "ConstraintMode",
    "FormSpec",
    "Representation",
    "CheckReport",
    "WRONG_ARITY",
    "NON_PRIME_MEMBER",
    "SUM_MISMATCH",
    "make_form",
    "canonicalize",
    "evaluate",
    "rep_text",
    "parity_feasible",
    "constraint_satisfied",
    "validate",
]

WRONG_ARITY = "WrongArity"
NON_PRIME_MEMBER = "NonPrimeMember"
SUM_MISMATCH = "SumMismatch"


class ConstraintMode(Enum):
    """Side conditions a representation must satisfy beyond primality.

    UNCONSTRAINED  no condition at all.
    DISJOINT       no prime value appears both added and subtracted.
    ALL_DISTINCT   all k primes pairwise different; repeats are forbidden
                   even within one side.
    LITERAL        the side condition bundled with the classic statement of
                   each form, read with exists-labeling semantics: a
                   canonical pair qualifies iff SOME assignment of its
                   members to the form's named slots satisfies the stated
                   inequalities.  Concretely: (3,1) forbids the subtracted
                   prime from reappearing among the added pair, which is
                   exactly what rules out the trivial n = n + q - q
                   solutions; (3,2) carries no condition; (5,1) only needs
                   one added prime to differ from the subtracted one; every
                   other form, including all (k, s) without a classic
                   statement, is read as DISJOINT.

    The modes form an implication chain: a pair valid under ALL_DISTINCT is
    valid under DISJOINT, which is valid under LITERAL, which is valid
    under UNCONSTRAINED.
    """

    UNCONSTRAINED = "unconstrained"
    LITERAL = "literal"
    DISJOINT = "disjoint"
    ALL_DISTINCT = "distinct"


@dataclass(frozen=True)
class FormSpec:
    """Shape of a signed partition: k primes total, s of them subtracted."""

    k: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise UsageError(f"need at least two primes in a form, got k={self.k}")
        if not 0 <= self.s < self.k:
            raise UsageError(f"subtracted count must satisfy 0 <= s < k, got s={self.s}")

    @property
    def positives_count(self) -> int:
        return self.k - self.s


def make_form(k: int, s: int) -> FormSpec:
    """Validated constructor for a (k, s) form.  s=0 is the pure-sum case."""
    return FormSpec(k, s)


class Representation(NamedTuple):
    """Canonical solution: both sides ascending, multiset semantics."""

    positives: tuple[int, ...]
    negatives: tuple[int, ...]


class CheckReport(NamedTuple):
    """Outcome of validate(): overall verdict plus every failure found."""

    valid: bool
    failures: tuple[str, ...]


_VALID = CheckReport(True, ())
_CONSTRAINT_CODE = {mode: f"ConstraintViolated({mode.value})" for mode in ConstraintMode}


def canonicalize(positives: Iterable[int], negatives: Iterable[int]) -> Representation:
    """Sort both sides ascending; the only way Representations are made."""
    return Representation(tuple(sorted(positives)), tuple(sorted(negatives)))


def evaluate(rep: Representation) -> int:
    """Value of the signed sum: added primes minus subtracted primes."""
    return sum(rep.positives) - sum(rep.negatives)


def rep_text(rep: Representation) -> str:
    """Human-readable equation right-hand side, e.g. ``3+5-7``."""
    head = "+".join(str(p) for p in rep.positives)
    tail = "".join(f"-{q}" for q in rep.negatives)
    return head + tail


def parity_feasible(n: int, form: FormSpec, two_allowed: bool) -> bool:
    """Whether n is reachable at all.

    Over odd primes every signed sum of k terms is congruent to k mod 2,
    so n must match the parity of k.  Once 2 may participate, mixed
    parities appear and no n is excluded up front.
    """
    if two_allowed:
        return True
    return (n - form.k) % 2 == 0


def constraint_satisfied(
    positives: tuple[int, ...],
    negatives: tuple[int, ...],
    form: FormSpec,
    mode: ConstraintMode,
) -> bool:
    """Evaluate just the side condition; sides must already match the form."""
    if mode is ConstraintMode.UNCONSTRAINED:
        return True
    if mode is ConstraintMode.ALL_DISTINCT:
        return len(set(positives).union(negatives)) == len(positives) + len(negatives)
    if mode is ConstraintMode.LITERAL:
        shape = (form.k, form.s)
        if shape == (3, 2):
            return True
        if shape == (5, 1):
            q = negatives[0]
            return any(p != q for p in positives)
    # DISJOINT, and the LITERAL reading of every remaining form.
    return set(positives).isdisjoint(negatives)


def validate(
    rep: Representation,
    n: int,
    form: FormSpec,
    mode: ConstraintMode,
    table: PrimeTable,
) -> CheckReport:
    """Full membership check of a representation against n, form and mode.

    Collects every applicable failure code rather than stopping at the
    first: WrongArity, NonPrimeMember, SumMismatch, ConstraintViolated(mode).
    The side condition is only judged when the arity is right, since it is
    meaningless for a malformed pair.  Member primality is answered by the
    table and raises OutOfRangeError beyond its sieved limit.
    """
    positives = rep.positives
    negatives = rep.negatives
    failures = []
    arity_ok = len(positives) == form.k - form.s and len(negatives) == form.s
    if not arity_ok:
        failures.append(WRONG_ARITY)

    limit = table.limit
    bits = table.primality
    members_prime = True
    for member in positives:
        if member > limit:
            raise OutOfRangeError(f"member {member} is outside the sieved range [0, {limit}]")
        if member < 0 or not bits[member]:
            members_prime = False
            break
    if members_prime:
        for member in negatives:
            if member > limit:
                raise OutOfRangeError(f"member {member} is outside the sieved range [0, {limit}]")
            if member < 0 or not bits[member]:
                members_prime = False
                break
    if not members_prime:
        failures.append(NON_PRIME_MEMBER)

    if sum(positives) - sum(negatives) != n:
        failures.append(SUM_MISMATCH)

    if arity_ok and not constraint_satisfied(positives, negatives, form, mode):
        failures.append(_CONSTRAINT_CODE[mode])

    if not failures:
        return _VALID
    return CheckReport(False, tuple(failures))
