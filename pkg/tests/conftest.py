from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from quatweyl.exact import QuadExt5

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_ints = st.integers(min_value=-6, max_value=6)
quadext = st.builds(QuadExt5, rationals, rationals)


def nonzero(strategy):
    return strategy.filter(lambda x: x != 0)


def half_integers():
    return st.integers(min_value=-8, max_value=8).map(lambda n: Fraction(n, 2))


# --- acceptance summary: one line per criterion, from the real test outcome ---

import pytest  # noqa: E402

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    note = dict(item.user_properties).get("summary", "")
    if rep.failed:
        msg = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
        note = f"{note} | {msg}" if note else msg
    _CRITERIA[mark.args[0]] = ("PASS" if rep.passed else "FAIL", item.name, rep.duration, note)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, name, secs, note = _CRITERIA[n]
        terminalreporter.write_line(f"[{status}] criterion {n:2d} {name} ({secs:.2f}s): {note}")
