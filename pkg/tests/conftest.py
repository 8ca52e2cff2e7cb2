import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import pytest

_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request, capsys):
    """Call with (criterion, ok, detail); the line is printed now and again in the summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(n: int, ok: bool, detail: str) -> bool:
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines[n] = line
        with capsys.disabled():
            print("\n" + line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
