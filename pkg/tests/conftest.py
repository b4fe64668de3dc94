from __future__ import annotations

import re

import pytest

from hyperlep import derive_table, enumerate_subgroups, leptons
from hyperlep.paperdata import load_fixtures

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_acceptance: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def ps():
    return leptons()


@pytest.fixture(scope="session")
def table(ps):
    return derive_table(ps)


@pytest.fixture(scope="session")
def fx():
    return load_fixtures()


@pytest.fixture(scope="session")
def census(table):
    return enumerate_subgroups(table)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    n, title = int(m.group(1)), m.group(2).replace("_", " ")
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(n)
        status = "PASS" if report.outcome == "passed" else "FAIL"
        if prev is None or prev[1] == "PASS":
            _acceptance[n] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_acceptance):
        title, status = _acceptance[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")
