from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hubnet import scenario as scenario_io  # noqa: E402
from hubnet.money import Money  # noqa: E402
from hubnet.network import Edge, Network  # noqa: E402
from hubnet.pipeline import solve  # noqa: E402


def M(x) -> Money:
    return Money.parse(x)


def int_network(n: int, edges: list[tuple[int, int, int]], *, checked: bool = True) -> Network:
    """Network whose three cost classes all equal the given integer weight."""
    es = [Edge(u, v, Money.parse(w), Money.parse(w), Money.parse(w)) for u, v, w in edges]
    return Network(n, tuple(es)) if checked else Network.unchecked(n, es)


@pytest.fixture(scope="session")
def example_path() -> Path:
    return scenario_io.example_scenario_path()


@pytest.fixture(scope="session")
def example(example_path):
    return scenario_io.load(example_path)


@pytest.fixture(scope="session")
def example_solution(example):
    return solve(example)
