from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from groundkernel.digraph import DefGraph, build_graph
from groundkernel.lexicon import parse_text

settings.register_profile("default", deadline=None)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"
TOY = DATA / "toy.txt"


@pytest.fixture(scope="session")
def toy():
    with open(TOY, encoding="utf-8") as fh:
        return parse_text(fh)


@pytest.fixture(scope="session")
def g1(toy):
    return build_graph(toy)


def as_graph(vertices, arcs):
    return DefGraph(vertices, arcs)


@st.composite
def digraphs(draw, min_size=0, max_size=8):
    """Small digraphs over single-letter tokens, self-loops included."""
    n = draw(st.integers(min_size, max_size))
    vertices = [chr(ord("a") + i) for i in range(n)]
    pairs = [(u, v) for u in vertices for v in vertices]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return vertices, arcs


@st.composite
def graph_and_subset(draw, max_size=8):
    vertices, arcs = draw(digraphs(max_size=max_size))
    subset = draw(st.sets(st.sampled_from(vertices))) if vertices else set()
    return vertices, arcs, subset


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion checked by the test")


def pytest_runtest_logreport(report):
    if report.when not in ("setup", "call") or not getattr(report, "criterion", None):
        return
    number, text = report.criterion
    outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    previous = _criteria.get(number, ("PASS", text))[0]
    if report.when == "call" or outcome != "PASS":
        _criteria[number] = (outcome if previous == "PASS" else previous, text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcome, text = _criteria[number]
        terminalreporter.write_line(f"[{outcome}] criterion {number:2d}: {text}")
