import pytest

from pantsloop.catalog import catalog


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def loops(cat):
    return {name: e.value for name, e in cat.items() if e.kind == "loop"}


_CRITERIA = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        _CRITERIA.setdefault(name, report.outcome)
        if report.failed:
            _CRITERIA[name] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        _, _, rest = name.partition("test_criterion_")
        number, _, what = rest.partition("_")
        verdict = "PASS" if _CRITERIA[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(number):2d} {verdict} {what.replace('_', ' ')}")
