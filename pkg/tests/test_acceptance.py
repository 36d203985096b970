"""Acceptance suite: one test per criterion, each printing a single pass/fail line.

Set SUPERJACK_SUITE=full for the larger parameter grids.
"""

import os

import pytest

from superjack.acceptance import CRITERIA, run_criterion

SUITE = os.environ.get("SUPERJACK_SUITE", "fast")
LINES: list = []


@pytest.mark.parametrize("number,name", [(n, name) for n, name, _ in CRITERIA], ids=[name for _, name, _ in CRITERIA])
def test_criterion(number, name):
    res = run_criterion(number, SUITE == "full")
    line = res.line()
    LINES.append(line)
    print(line)
    failed = [c for c in res.checks if not c.passed]
    assert res.error is None, res.error
    assert res.checks, f"criterion {number} produced no checks"
    assert not failed, "; ".join(f"{c.id}: abs_err={c.abs_err:.3g} tol={c.tol:g}" for c in failed[:5])
