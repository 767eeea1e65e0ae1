"""The seven-point acceptance gate.

Each criterion is one test that prints a single [acceptance] PASS/FAIL
verdict line (echoed again in the terminal summary) before asserting.
Expected values were produced by the brute-force oracle or by hand
checks against it before being frozen here; no expectation was invented.

Criterion 2 is known to fail for two of the six forms: under a hard
prime cap of 10^4 the forms (3,2) and (5,4) provably cannot represent
the largest few odd targets below 10^4, because their single added
prime would have to exceed the cap (p = n + sum of subtracted primes
>= n + 6 resp. n + 12, while the largest usable prime is 9973).  The
criterion is asserted as stated rather than weakened; the companion
boundary test in test_verify.py pins the exact failure set.
"""

import math
import random
import time

import acceptance_report
from golden_examples import ERRONEOUS, GOLDEN

from primesums import (
    EXHAUSTED,
    SUM_MISMATCH,
    ConstraintMode,
    Representation,
    SearchBudget,
    VerifyPolicy,
    build_sum_table,
    build_table,
    count_reps,
    count_unconstrained,
    enumerate_reps,
    make_form,
    oracle_count,
    primes_up_to,
    validate,
    verify_range,
)
from primesums.cli import run

SWEEP_FORMS = [(3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4)]
SYMMETRIC_MODES = [
    ConstraintMode.UNCONSTRAINED,
    ConstraintMode.DISJOINT,
    ConstraintMode.ALL_DISTINCT,
]


def _report(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"[acceptance] criterion {num} ({label}): {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" [{detail}]"
    acceptance_report.record(line)
    print(line, flush=True)
    assert ok, line


def test_criterion_1_worked_examples():
    table = build_table(200)
    checked = 0
    problems = []
    for (k, s), by_n in GOLDEN.items():
        form = make_form(k, s)
        for n, pairs in by_n.items():
            for pos, neg in pairs:
                checked += 1
                report = validate(Representation(pos, neg), n, form, ConstraintMode.LITERAL, table)
                if not report.valid:
                    problems.append((k, s, n, report.failures))
    for n, (k, s), (pos, neg) in ERRONEOUS:
        checked += 1
        report = validate(Representation(pos, neg), n, make_form(k, s), ConstraintMode.LITERAL, table)
        if report.valid or SUM_MISMATCH not in report.failures:
            problems.append((k, s, n, report.failures))
    _report(1, "worked examples", not problems,
            f"{checked} lines, {len(problems)} unexpected verdicts")


def test_criterion_2_desk_sweep():
    policy = VerifyPolicy(initial_cap=100, max_cap=10_000, growth=2)
    started = time.perf_counter()
    exhausted = {}
    for k, s in SWEEP_FORMS:
        report = verify_range(1, 9999, make_form(k, s), ConstraintMode.DISJOINT, policy)
        exhausted[(k, s)] = [o.n for o in report.outcomes if o.kind == EXHAUSTED]
    elapsed = time.perf_counter() - started
    total_bad = sum(len(v) for v in exhausted.values())
    per_form = ", ".join(f"({k},{s})={len(v)}" for (k, s), v in exhausted.items())
    ok = total_bad == 0 and elapsed < 300.0
    _report(2, "odd sweep to 9999, cap 10^4", ok,
            f"{elapsed:.1f}s; exhausted: {per_form}")


def test_criterion_3_oracle_equivalence():
    table = build_table(40)
    cases = 0
    mismatches = []
    for k in range(2, 6):
        for s in range(k):
            form = make_form(k, s)
            for cap in (20, 30, 40):
                budget = SearchBudget(cap, table)
                for n in range(-30, 31):
                    for mode in ConstraintMode:
                        cases += 1
                        ref = oracle_count(n, form, mode, budget)
                        joined = count_reps(n, form, mode, budget)
                        listed = len(enumerate_reps(n, form, mode, budget))
                        if not (joined == ref == listed):
                            mismatches.append((k, s, cap, n, mode.value, ref, joined, listed))
    _report(3, "count = oracle = enumeration", not mismatches,
            f"{cases} cases, {len(mismatches)} mismatches")


def test_criterion_4_convolution_equivalence():
    table = build_table(60)
    cases = 0
    mismatches = []
    for k in range(2, 7):
        for s in range(k):
            form = make_form(k, s)
            for cap in (20, 40, 60):
                budget = SearchBudget(cap, table)
                for n in range(-40, 41):
                    cases += 1
                    fast = count_unconstrained(n, form, cap, table)
                    ref = oracle_count(n, form, ConstraintMode.UNCONSTRAINED, budget)
                    if fast != ref:
                        mismatches.append((k, s, cap, n, ref, fast))
    identity_failures = []
    for j in range(1, 7):
        for cap in (20, 40, 60):
            sums = build_sum_table(j, cap, table)
            m = len(primes_up_to(cap, table))
            if sums.total() != math.comb(m + j - 1, j):
                identity_failures.append((j, cap))
    ok = not mismatches and not identity_failures
    _report(4, "convolution vs oracle", ok,
            f"{cases} grid cases, {len(mismatches)} mismatches, "
            f"{len(identity_failures)} identity failures")


def test_criterion_5_property_suites():
    rng = random.Random(20260814)
    table = build_table(60)
    failures = []

    def draw_form(min_s=0):
        k = rng.randint(2, 5)
        s = rng.randint(min_s, k - 1)
        return make_form(k, s)

    # cap monotonicity: widening the budget never loses representations
    for _ in range(1000):
        form = draw_form()
        mode = rng.choice(list(ConstraintMode))
        n = rng.randint(-40, 40)
        cap_small = rng.randint(3, 60)
        cap_large = rng.randint(cap_small, 60)
        small = count_reps(n, form, mode, SearchBudget(cap_small, table))
        large = count_reps(n, form, mode, SearchBudget(cap_large, table))
        if small > large:
            failures.append(("monotonicity", form.k, form.s, mode.value, n, cap_small, cap_large))

    # mode ordering: relaxing the side condition never shrinks the count
    for _ in range(1000):
        form = draw_form()
        n = rng.randint(-40, 40)
        budget = SearchBudget(rng.randint(6, 40), table)
        u = count_reps(n, form, ConstraintMode.UNCONSTRAINED, budget)
        l = count_reps(n, form, ConstraintMode.LITERAL, budget)
        d = count_reps(n, form, ConstraintMode.DISJOINT, budget)
        a = count_reps(n, form, ConstraintMode.ALL_DISTINCT, budget)
        if not (u >= l >= d >= a):
            failures.append(("mode-order", form.k, form.s, n, budget.cap, (u, l, d, a)))

    # negation symmetry: swapping the two sides negates the value
    for _ in range(1000):
        form = draw_form(min_s=1)
        mirror = make_form(form.k, form.k - form.s)
        mode = rng.choice(SYMMETRIC_MODES)
        n = rng.randint(-40, 40)
        budget = SearchBudget(rng.randint(6, 40), table)
        if count_reps(n, form, mode, budget) != count_reps(-n, mirror, mode, budget):
            failures.append(("negation", form.k, form.s, mode.value, n, budget.cap))

    # witness determinism: reports are byte-identical for 1..8 workers
    policy = VerifyPolicy(40, 320, 2)
    form = make_form(3, 1)
    base = verify_range(1, 1100, form, ConstraintMode.DISJOINT, policy, jobs=1)
    base_bytes = base.summary_csv() + base.certificates_jsonl()
    for jobs in range(2, 9):
        other = verify_range(1, 1100, form, ConstraintMode.DISJOINT, policy, jobs=jobs)
        if other.summary_csv() + other.certificates_jsonl() != base_bytes:
            failures.append(("determinism", jobs))

    _report(5, "randomized property suites", not failures,
            f"3x1000 randomized cases + 1100-target sweep x 8 worker counts, "
            f"{len(failures)} failures")


def test_criterion_6_goldbach_crosscheck():
    table = build_table(100)
    form = make_form(2, 0)
    results = []
    for n, cap, want in [(10, 10, 2), (100, 100, 6)]:
        budget = SearchBudget(cap, table)
        ref = oracle_count(n, form, ConstraintMode.UNCONSTRAINED, budget)
        results.append(
            ref == want
            and count_reps(n, form, ConstraintMode.UNCONSTRAINED, budget) == want
            and count_unconstrained(n, form, cap, table) == want
        )
    _report(6, "pure-sum crosscheck", all(results), "r(10;10)=2, r(100;100)=6")


def test_criterion_7_round_trip(tmp_path, capsys):
    certs = tmp_path / "sweep.jsonl"
    code_verify = run(["verify", "--k", "3", "--s", "1", "--lo", "1", "--hi", "999",
                       "--certs", str(certs)])
    capsys.readouterr()
    code_check = run(["check-cert", str(certs)])
    captured = capsys.readouterr()
    emitted = sum(1 for line in certs.read_text().splitlines() if line.strip())
    rows = captured.out.splitlines()
    accepted = sum(1 for row in rows[1:] if ",accepted," in row)
    ok = (
        code_verify == 0
        and code_check == 0
        and emitted == 500
        and len(rows) == emitted + 1
        and accepted == emitted
    )
    _report(7, "verify then check-cert", ok,
            f"{emitted} certificates emitted, {accepted} accepted, "
            f"exit codes {code_verify}/{code_check}")
