from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kgraphkit.corpus import corpus, fixtures  # noqa: E402
from kgraphkit.skeleton import BudgetConfig  # noqa: E402

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")

# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict = {}


def small_budget(g, degree=3):
    return BudgetConfig.for_graph(g, degree=degree)


@pytest.fixture(scope="session")
def graphs():
    return fixtures()


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
