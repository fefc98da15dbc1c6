import pytest
from hypothesis import HealthCheck, settings

from idealkit.poly import Ring

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def R():
    return Ring(("x1", "x2", "x3"), ("y1", "y2", "y3"))


@pytest.fixture
def R2():
    return Ring(("x1", "x2"), ("y1", "y2"))


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line for an acceptance criterion and assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, title: str, ok: bool, detail: str, seconds: float, limit: float):
        passed = ok and seconds < limit
        line = (f"criterion {number} {'PASS' if passed else 'FAIL'}: {title} "
                f"[{detail}; {seconds:.2f}s of {limit:g}s]")
        lines.append((number, line))
        print(line)
        assert ok, line
        assert seconds < limit, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
