"""
This is a configuration file for pytest containing customizations and fixtures.

In VSCode, Code Coverage is recorded in config.xml. Delete this file to reset reporting.
"""

from __future__ import annotations

from typing import List

import numpy as np
import pytest
from _pytest.nodes import Item
from hypothesis import HealthCheck, settings

from src.model import Couplings, load_catalog

settings.register_profile(
    "default",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def pytest_collection_modifyitems(items: list[Item]):
    for item in items:
        if "/pipeline/" in item.nodeid or "/cli/" in item.nodeid:
            item.add_marker(pytest.mark.integration)
        elif "_slow_" in item.nodeid:
            item.add_marker(pytest.mark.slow)


@pytest.fixture
def headline() -> Couplings:
    """Jx = 1, Jy = Jz = Jp = 2."""
    return Couplings.headline()


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def draw_couplings(rng: np.random.Generator, count: int, low: float = -3.0, high: float = 3.0) -> List[Couplings]:
    return [Couplings(**dict(zip(("jx", "jy", "jz", "jp"), rng.uniform(low, high, 4)))) for _ in range(count)]


@pytest.fixture
def random_couplings(rng) -> List[Couplings]:
    return draw_couplings(rng, 20)


CORRUPTED_G1 = """\
g1:
  energy: -6
  terms:
    - ["⇓●", 1]
    - ["⇑○", -1]
    - ["⇑●", 1]
    - ["⇓○", 1]
"""


@pytest.fixture
def corrupted_catalog_file(tmp_path) -> str:
    """Catalog override with one amplitude sign of g1 flipped."""
    path = tmp_path / "corrupted.yaml"
    path.write_text(CORRUPTED_G1, encoding="utf-8")
    return str(path)
