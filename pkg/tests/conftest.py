import pytest

from tropmod.graph import WeightedGraph

ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run slow exhaustive oracle comparisons")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: slow exhaustive checks (enable with --runslow)")
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
        ACCEPTANCE[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"AC{number} {status}: {title}")


@pytest.fixture
def theta():
    return WeightedGraph.build([0, 0], [(0, 1)] * 3)


@pytest.fixture
def dumbbell():
    return WeightedGraph.build([0, 0], [(0, 0), (0, 1), (1, 1)])


@pytest.fixture
def genus2_graphs():
    """The seven stable graphs of genus 2, written out by hand."""
    return [
        WeightedGraph.build([2]),
        WeightedGraph.build([1], [(0, 0)]),
        WeightedGraph.build([1, 1], [(0, 1)]),
        WeightedGraph.build([0], [(0, 0), (0, 0)]),
        WeightedGraph.build([0, 1], [(0, 0), (0, 1)]),
        WeightedGraph.build([0, 0], [(0, 1)] * 3),
        WeightedGraph.build([0, 0], [(0, 0), (0, 1), (1, 1)]),
    ]
