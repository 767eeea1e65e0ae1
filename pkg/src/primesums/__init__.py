"""Signed prime partitions: witness search, exact counting, verification.

The package studies equations n = p_1 + ... + p_{k-s} - q_1 - ... - q_s
over (odd, by default) primes.  It finds witnesses, counts and
enumerates representations under a prime cap, sweeps target ranges with
cap deepening, and emits re-checkable certificates.
"""

from .counting import SumTable, TableRow, build_sum_table, count_unconstrained, counting_table
from .errors import OutOfRangeError, UsageError
from .forms import (
    CheckReport,
    ConstraintMode,
    FormSpec,
    NON_PRIME_MEMBER,
    Representation,
    SUM_MISMATCH,
    WRONG_ARITY,
    canonicalize,
    constraint_satisfied,
    evaluate,
    make_form,
    parity_feasible,
    rep_text,
    validate,
)
from .primes import PrimeTable, build_table, is_prime, primes_up_to
from .search import (
    CAP_EXHAUSTED,
    NotFound,
    PARITY_INFEASIBLE,
    SearchBudget,
    count_reps,
    enumerate_reps,
    find_witness,
    oracle_count,
)
from .verify import (
    CERTIFIED,
    CertCheck,
    Certificate,
    EXHAUSTED,
    Outcome,
    PARITY_SKIP,
    VerificationReport,
    VerifyPolicy,
    check_certificates,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "UsageError",
    "OutOfRangeError",
    "PrimeTable",
    "build_table",
    "is_prime",
    "primes_up_to",
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
    "SearchBudget",
    "NotFound",
    "PARITY_INFEASIBLE",
    "CAP_EXHAUSTED",
    "find_witness",
    "enumerate_reps",
    "count_reps",
    "oracle_count",
    "SumTable",
    "TableRow",
    "build_sum_table",
    "count_unconstrained",
    "counting_table",
    "VerifyPolicy",
    "Certificate",
    "Outcome",
    "VerificationReport",
    "CertCheck",
    "CERTIFIED",
    "EXHAUSTED",
    "PARITY_SKIP",
    "verify_range",
    "check_certificates",
]
