import pytest

from partbound.properties import fig3_network

_acceptance: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): an exit criterion of the build")


@pytest.fixture(scope="session")
def fig3():
    return fig3_network()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"{_acceptance[label]}  {label}")
