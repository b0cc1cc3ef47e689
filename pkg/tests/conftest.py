import pytest

# criterion number -> (title, passed); filled in by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, passed: bool):
        ACCEPTANCE_RESULTS[number] = (title, passed)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"AC{number} {'PASS' if passed else 'FAIL'}  {title}")
