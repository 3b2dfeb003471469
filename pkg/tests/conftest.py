from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

from ivfg import read_graph

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

# filled by test_acceptance, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def triangle():
    return read_graph((FIXTURES / "triangle.ivfg").read_bytes())


@pytest.fixture
def four_vertex_highly_irregular():
    return read_graph((FIXTURES / "highly_irregular.ivfg").read_bytes())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
