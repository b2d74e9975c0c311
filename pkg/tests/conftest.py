"""One PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_RESULTS = {}


@pytest.fixture(autouse=True)
def _criterion_tag(request):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        request.node.user_properties.append(("criterion", (m.args[0], m.args[1])))
    yield


@pytest.fixture
def note(request):
    """Attach a one-line summary (residual vs target) to the current criterion."""
    def add(text):
        request.node.user_properties.append(("info", str(text)))
    return add


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed or report.skipped:
        n, title = props["criterion"]
        entry = _RESULTS.setdefault(n, {"title": title, "failed": False, "info": []})
        if report.failed:
            entry["failed"] = True
        infos = [v for k, v in report.user_properties if k == "info"]
        for i in infos:
            if i not in entry["info"]:
                entry["info"].append(i)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        e = _RESULTS[n]
        status = "FAIL" if e["failed"] else "PASS"
        info = "; ".join(e["info"])
        terminalreporter.write_line(f"criterion {n:2d}: {status} — {e['title']}" + (f" — {info}" if info else ""))
