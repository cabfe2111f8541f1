"""Shared fixtures: the construction chain is built once per session."""

from __future__ import annotations

from pathlib import Path

import pytest

from starpack import (
    chamfer,
    decode_planar_code,
    find_star_packings,
    fixture_dodecahedron,
    semi_star_transform,
    star_transform,
)

DATA_DIR = Path(__file__).parent / "data"

# counterclockwise rotations of a cubic planar graph with a 2-cut: two
# K4-minus-an-edge blocks joined by the edges 3-7 and 4-8
TWOCUT_ROTATIONS = [
    (4, 2, 3), (4, 3, 1), (1, 2, 7), (8, 2, 1),
    (8, 7, 6), (8, 5, 7), (6, 5, 3), (5, 6, 4),
]

# counterclockwise rotations of the tetrahedron (center vertex 1)
TETRAHEDRON_ROTATIONS = [(2, 3, 4), (1, 4, 3), (1, 2, 4), (1, 3, 2)]


def load_data_graph(name: str):
    return decode_planar_code((DATA_DIR / f"{name}.plc").read_bytes())[0]


@pytest.fixture(scope="session")
def c20():
    return fixture_dodecahedron()


@pytest.fixture(scope="session")
def c80(c20):
    return chamfer(c20)


@pytest.fixture(scope="session")
def c80_packing(c80):
    result = find_star_packings(c80, limit=1)
    assert result.packings
    return result.packings[0]


@pytest.fixture(scope="session")
def f180_with_provenance(c80, c80_packing):
    return star_transform(c80, c80_packing)


@pytest.fixture(scope="session")
def f180(f180_with_provenance):
    return f180_with_provenance[0]


@pytest.fixture(scope="session")
def f140_with_provenance(c80, c80_packing):
    return semi_star_transform(c80, c80_packing)


@pytest.fixture(scope="session")
def f140(f140_with_provenance):
    return f140_with_provenance[0]


@pytest.fixture(scope="session")
def c24():
    return load_data_graph("c24")


@pytest.fixture(scope="session")
def c60():
    return load_data_graph("c60")


@pytest.fixture(scope="session")
def cube():
    return load_data_graph("cube")


@pytest.fixture(scope="session")
def tetrahedron():
    return load_data_graph("tetrahedron")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo one line per acceptance criterion at the end of the run."""
    try:
        from .test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
