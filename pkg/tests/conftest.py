import pytest

_acceptance_lines: list[str] = []


@pytest.fixture
def record_criterion():
    """Collect the one-line verdicts; they are replayed in the terminal
    summary so a plain verbose run shows every criterion's line."""

    def _record(line: str) -> None:
        print(line)
        _acceptance_lines.append(line)

    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
