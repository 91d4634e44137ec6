import os

import pytest

_RESULTS: dict[int, list[tuple[str, str]]] = {}


def pytest_addoption(parser):
    parser.addoption("--allow-long", action="store_true", default=False,
                     help="run searches that take minutes to hours")


def allow_long(config) -> bool:
    return config.getoption("--allow-long") or os.environ.get("CHROMSURF_ALLOW_LONG", "") not in ("", "0")


@pytest.fixture
def long_ok(request):
    if not allow_long(request.config):
        pytest.skip("long run: pass --allow-long or set CHROMSURF_ALLOW_LONG=1")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _RESULTS.setdefault(crit, []).append((report.nodeid.split("::")[-1], report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_RESULTS):
        parts = _RESULTS[crit]
        outcomes = {o for _, o in parts}
        if "failed" in outcomes:
            verdict = "FAIL"
        elif outcomes == {"skipped"}:
            verdict = "SKIPPED (long run, needs --allow-long)"
        elif "skipped" in outcomes:
            verdict = "PASS (long part skipped, needs --allow-long)"
        else:
            verdict = "PASS"
        detail = ", ".join(f"{n}={o}" for n, o in parts)
        tr.write_line(f"criterion {crit:2d}: {verdict}  [{detail}]")
