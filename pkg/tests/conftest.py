"""Shared pytest plumbing.

The acceptance suite records one line per criterion; the hook below prints
them after the run regardless of capture settings, so a plain `pytest -v`
always shows the pass/fail ledger.
"""

_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in _ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
