import pytest

from pinnacle.oracle import distribution


@pytest.fixture(scope="session")
def distributions():
    """Exhaustive pinnacle-set histograms of S_1 .. S_8."""
    return {n: distribution(n).table for n in range(1, 9)}


_criteria: list[tuple[str, bool]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the terminal summary prints them all."""
    def record(name, ok):
        _criteria.append((name, bool(ok)))
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _criteria:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}")
