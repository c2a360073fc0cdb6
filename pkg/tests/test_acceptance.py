"""Acceptance gate: one test per criterion.

Each test gathers the checks certifying its criterion, prints a single
pass/fail line (with per-check details below it), asserts every check
passed, and asserts the run fit the stated time budget.  The check builders
are process-cached, so criteria measured here are not re-paid by the other
test modules or by the command-line `verify` suites.
"""

import time

from linksgould import cli


def _run(builder, budget_s, label, **kw):
    t0 = time.perf_counter()
    checks = builder(**kw)
    dt = time.perf_counter() - t0
    ok = all(c.ok for c in checks)
    print(f"criterion {label}: {'PASS' if ok else 'FAIL'} "
          f"({dt:.1f}s, budget {budget_s}s)")
    for c in checks:
        print(f"    [{c.name}] {'ok' if c.ok else 'FAILED'}: {c.detail}")
    assert ok, f"failed checks: {[c.name for c in checks if not c.ok]}"
    assert dt < budget_s, f"criterion {label} took {dt:.1f}s, budget {budget_s}s"


def test_criterion_01_rmatrix_gates_exact():
    _run(cli.checks_rmatrix_gates, 10, "1 (R-matrix gates)")


def test_criterion_02_invariant_special_values():
    _run(cli.checks_special_values, 5, "2 (unknot and unlink values)")


def test_criterion_03_markov_invariance():
    _run(cli.checks_markov_invariance, 600, "3 (Markov invariance)")


def test_criterion_04_dimension_ladder():
    _run(cli.suite_bratteli, 5, "4 (dimension combinatorics)")


def test_criterion_05_h4_irreps_and_branching():
    _run(cli.suite_hecke, 120, "5 (four-strand irreps)")


def test_criterion_06_derived_relations():
    _run(cli.checks_derived_relations, 600, "6 (derived relations)")


def test_criterion_07_rank_claims():
    _run(cli.checks_rank_claims, 600, "7 (rank claims)")


def test_criterion_08_printed_expansions():
    _run(cli.checks_printed_expansions, 60, "8 (printed expansions)")


def test_criterion_09_trace_suite():
    _run(cli.suite_trace, 300, "9 (trace functional)")


def test_criterion_10_crossvalidation():
    _run(cli.suite_crosscheck, 900, "10 (two-path cross-validation)")
