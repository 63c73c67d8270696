"""Acceptance reporting: one PASS/FAIL line per criterion in the terminal summary."""
from __future__ import annotations

import pytest

_OUTCOMES: dict[int, tuple[str, str, float]] = {}
_DETAILS: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.fixture
def detail(request):
    """Attach a one-line measurement to the running criterion."""
    marker = request.node.get_closest_marker("criterion")

    def note(text: str) -> None:
        if marker is not None:
            _DETAILS[marker.args[0]] = text
    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    _OUTCOMES[number] = ("PASS" if rep.passed else "FAIL", title, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        status, title, duration = _OUTCOMES[number]
        extra = _DETAILS.get(number, "")
        line = f"criterion {number}: {status}  {title}  ({duration:.1f}s)"
        terminalreporter.write_line(line + (f"  -- {extra}" if extra else ""))
