"""Shared test plumbing: the acceptance suite records one PASS/FAIL line per
criterion here so they appear in the terminal summary of every run,
regardless of output capturing."""

ACCEPTANCE_REPORT: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_REPORT.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
