import pytest


class AcceptanceLog:
    """Collects one PASS/FAIL line per acceptance criterion; printed in the
    terminal summary so the lines survive pytest's output capture."""

    def __init__(self):
        self.lines = []

    def announce(self, name: str, passed: bool) -> None:
        self.lines.append(f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'}")


_LOG = AcceptanceLog()


@pytest.fixture
def acceptance_log():
    return _LOG


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _LOG.lines:
        terminalreporter.section("acceptance criteria")
        for line in _LOG.lines:
            terminalreporter.write_line(line)
