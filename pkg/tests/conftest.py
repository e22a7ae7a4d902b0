"""
Shared fixtures: repo root on sys.path, a seeded generator, fresh controller
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from domain.workbench_controller import WorkbenchController  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def fresh_controller(monkeypatch):
    monkeypatch.delenv("LOSE_WORKBENCH_OUTPUT_DIR", raising=False)
    WorkbenchController.reset()
    yield
    WorkbenchController.reset()
