import itertools

import pytest

from multizagreb.tree import Tree


def brute_isomorphic(a: Tree, b: Tree) -> bool:
    """Try every vertex permutation; exponential, for n <= 7 only."""
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    target = {frozenset(e) for e in b.edges()}
    edges = a.edges()
    for perm in itertools.permutations(range(a.n)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in edges):
            return True
    return False


@pytest.fixture
def brute_iso():
    return brute_isomorphic


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        terminalreporter.write_line(f"{_criteria[name]:7s} {name}")
