import pytest

# collected by the acceptance tests; printed after the run so the criterion
# verdicts survive pytest's capture
_criterion_lines: list[str] = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion, then assert."""

    def record(criterion: str, ok: bool, detail: str = ""):
        verdict = "PASS" if ok else "FAIL"
        line = f"{verdict} {criterion}" + (f" ({detail})" if detail else "")
        _criterion_lines.append(line)
        assert ok, f"{criterion}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _criterion_lines:
            terminalreporter.write_line(line)
