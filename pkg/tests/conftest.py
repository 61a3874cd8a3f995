"""Shared test plumbing: the acceptance-criteria report.

Acceptance tests register one line per criterion; the lines are echoed in
the terminal summary so a plain ``pytest -v`` run shows the pass/fail
status of every criterion even with output capture on.
"""

CRITERIA = []


def record_criterion(number, title, ok):
    CRITERIA.append((number, title, ok))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(CRITERIA):
        terminalreporter.write_line(
            "criterion %2d [%s] %s" % (number, "PASS" if ok else "FAIL",
                                       title))
