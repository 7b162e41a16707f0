import pytest

# criterion id -> (passed, description, detail), filled by tests/test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def report():
    def _report(cid: int, description: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[cid] = (bool(passed), description, detail)
        print(f"{'PASS' if passed else 'FAIL'} [{cid}] {description}: {detail}")
    return _report


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE):
        passed, description, detail = ACCEPTANCE[cid]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} [{cid}] {description}: {detail}")
