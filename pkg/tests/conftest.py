from functools import lru_cache

import hypothesis
import pytest

from permcheck.catalog import build_named

hypothesis.settings.register_profile("default", deadline=None, max_examples=60)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")


@lru_cache(maxsize=None)
def group(name):
    return build_named(name)


@pytest.fixture(scope="session")
def grp():
    return group


# -- acceptance reporting: one PASS/FAIL line per criterion ----------------

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


_setup_secs: dict[str, float] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if rep.when == "setup":
        # module fixtures (the shared survey run) count toward the first criterion using them
        _setup_secs[item.nodeid] = rep.duration
        if rep.failed:
            _criteria[n] = (title, "FAIL", rep.duration)
    elif rep.when == "call":
        secs = rep.duration + _setup_secs.get(item.nodeid, 0.0)
        _criteria[n] = (title, "PASS" if rep.passed else "FAIL", secs)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status, secs = _criteria[n]
        terminalreporter.write_line(f"{status} criterion {n}: {title} ({secs:.2f}s)")
