import pytest

# (criterion id, passed, message) lines filled in by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def _order(line):
    head = line[0].split()[0]
    digits = head.rstrip('abcdefghijklmnopqrstuvwxyz')
    return int(digits), head


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, msg in sorted(ACCEPTANCE_LINES, key=_order):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {cid}: {msg}")
