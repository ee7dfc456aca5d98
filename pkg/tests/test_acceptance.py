"""Acceptance battery: one PASS/FAIL line per criterion.

All comparisons are exact (rational arithmetic); the only tolerances are
the wall-clock budgets pinned in ``hopfoid.suite.CRITERIA``.  Criteria 13
and 14 compare against identities as displayed; those that do not hold are
reported, with the corrected forms, and the criterion fails.
"""

import pytest

from hopfoid.suite import CRITERIA, run_criterion

BUDGETS = {1: 1.0, 2: 1.0, 3: 10.0, 4: 1.0, 5: 10.0, 6: 15.0, 7: 15.0, 8: 15.0,
           9: 2.0, 10: 2.0, 11: 1.0, 12: 2.0, 13: 5.0, 14: 2.0, 15: 5.0}


def test_budgets_pinned():
    assert {n: b for n, _, _, b in CRITERIA} == BUDGETS


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    res = run_criterion(number)
    print()
    print(res.line())
    if not res.passed:
        for d in res.detail:
            print("      " + d)
    assert res.passed, "\n".join(str(d) for d in res.detail)
