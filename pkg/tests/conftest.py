import pytest
from hypothesis import settings

import primerec

# Kernel JIT warm-up on first call would trip hypothesis' per-example deadline.
settings.register_profile("primerec", deadline=None)
settings.load_profile("primerec")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    """Record and print one `[acceptance] ...: PASS/FAIL` line, then assert."""

    def report(tag: str, ok: bool, detail: str) -> None:
        line = f"[acceptance] {tag}: {'PASS' if ok else 'FAIL'} ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return report


def pytest_report_header(config):
    return f"primerec backend: {primerec.get_backend()}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
