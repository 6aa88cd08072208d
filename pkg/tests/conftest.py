import pytest
from hypothesis import strategies as st

from bnspectra.graph import Graph, from_edge_list

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the terminal summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _ACCEPTANCE[item.nodeid] = (marker.args[0], "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_ACCEPTANCE.values(), key=lambda x: int(x[0].split()[0].lstrip("AC"))):
        terminalreporter.write_line(f"{status}  {label}")


def as_graph(n, edges) -> Graph:
    return from_edge_list(n, edges)
