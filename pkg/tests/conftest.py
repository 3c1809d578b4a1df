import pytest

# criterion number -> (title, passed, detail); filled in by tests/test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        ACCEPTANCE[number] = (title, bool(passed), detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}"
        terminalreporter.write_line(f"{line} [{detail}]" if detail else line)
