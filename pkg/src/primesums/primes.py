"""Prime sieving and primality queries.

Everything downstream (validation, witness search, counting) treats a
PrimeTable as its universe of allowed summands.  Tables are immutable
after construction, so they can be shared freely and shipped to worker
processes without copying concerns.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .errors import OutOfRangeError, UsageError

__all__ = ["PrimeTable", "build_table", "is_prime", "primes_up_to"]


@dataclass(frozen=True)
class PrimeTable:
    """Sieved primality oracle over [0, limit].

    ``primality[x]`` is nonzero iff x is prime.  ``odd_primes`` lists every
    odd prime <= limit in ascending order.  2 joins enumerations only when
    ``two_included`` is set; the classic odd/even statements are made over
    odd primes, so the default leaves it out.
    """

    limit: int
    primality: bytes
    odd_primes: tuple[int, ...]
    two_included: bool = False


def build_table(limit: int, include_two: bool = False) -> PrimeTable:
    """Sieve up to ``limit`` inclusive and freeze the result."""
    if limit < 2:
        raise UsageError(f"sieve limit must be at least 2, got {limit}")
    sieve = bytearray(b"\x01" * (limit + 1))
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start::p] = b"\x00" * len(range(start, limit + 1, p))
    odd = tuple(x for x in range(3, limit + 1, 2) if sieve[x])
    return PrimeTable(limit, bytes(sieve), odd, include_two)


def is_prime(x: int, table: PrimeTable) -> bool:
    """Primality of x, answered from the sieve; never guesses outside it."""
    if x < 0 or x > table.limit:
        raise OutOfRangeError(f"{x} is outside the sieved range [0, {table.limit}]")
    return bool(table.primality[x])


def primes_up_to(cap: int, table: PrimeTable) -> tuple[int, ...]:
    """Ascending primes <= cap, honouring the table's stance on 2."""
    if cap > table.limit:
        raise OutOfRangeError(f"cap {cap} exceeds the sieved limit {table.limit}")
    odds = table.odd_primes[: bisect_right(table.odd_primes, cap)]
    if table.two_included and cap >= 2:
        return (2,) + odds
    return odds
