import random

import networkx as nx
import pytest

from slee.graph import Graph
from slee.search import enumerate_classes

_criteria: dict[int, list] = {}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def classes_upto(n_max: int, connected_only: bool = False) -> list[Graph]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(enumerate_classes(n, connected_only))
    return out


@pytest.fixture(scope="session")
def classes_le5():
    return classes_upto(5)


@pytest.fixture(scope="session")
def classes_le6():
    return classes_upto(6)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for mark in report.user_properties:
        if mark[0] == "criterion":
            number, title = mark[1]
            _criteria.setdefault(number, [title, True])
            if report.failed:
                _criteria[number][1] = False


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}")
