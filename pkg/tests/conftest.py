import pytest

from semiconj.families import build_family

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if not marker:
        return
    number, title = marker
    previous = _CRITERIA.get(number, (title, "PASS"))[1]
    outcome = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
    _CRITERIA[number] = (title, outcome)


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker:
        request.node.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, outcome = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {outcome}  {title}")


@pytest.fixture(scope="session")
def T2():
    return build_family("tn", 2)


@pytest.fixture(scope="session")
def T3():
    return build_family("tn", 3)


@pytest.fixture(scope="session")
def T4():
    return build_family("tn", 4)


@pytest.fixture(scope="session")
def I2():
    return build_family("in", 2)


@pytest.fixture(scope="session")
def I3():
    return build_family("in", 3)


@pytest.fixture(scope="session")
def M22():
    return build_family("mat", 2, 2)


@pytest.fixture(scope="session")
def Z5():
    return build_family("group", "z5")
