"""Collects the acceptance-gate verdict lines and echoes them after the run.

pytest captures stdout, so the gate records one line per criterion here and
a terminal-summary hook prints them where they are always visible.
"""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
