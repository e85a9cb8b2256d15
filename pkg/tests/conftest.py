import pytest

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    class Recorder:
        def __call__(self, number, title, ok, detail=""):
            line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
            if detail:
                line += f" ({detail})"
            ACCEPTANCE_RESULTS[number] = line
            print(line)
            return ok

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[number])
