import pytest

_LINES: dict[int, str] = {}


@pytest.fixture
def record_criterion():
    """Store the PASS/FAIL line of one acceptance criterion for the summary."""
    def record(number: int, line: str) -> None:
        _LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_LINES):
        terminalreporter.write_line(_LINES[number])
