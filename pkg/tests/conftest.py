"""Shared test plumbing: acceptance-criteria summary lines.

test_acceptance appends one line per criterion; they are echoed in the
terminal summary so a plain `pytest -v` run shows the pass/fail status
of every criterion even when all tests pass.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
