import pytest

from tricone.conefacets import enumerate_facets

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--allow-long", action="store_true", default=False,
                     help="run the tau_8 enumeration checks (several minutes)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--allow-long"):
        return
    skip = pytest.mark.skip(reason="needs --allow-long")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


_cones = {}


def cone(n):
    if n not in _cones:
        _cones[n] = enumerate_facets(n)
    return _cones[n]


@pytest.fixture(scope="session")
def cones():
    return cone
