"""
Shared fixtures. The testing configuration runs Celery tasks in-process.
"""
import json
import os

os.environ['FERRO2SPIN_ENV'] = 'testing'

import networkx as nx  # noqa: E402
import numpy as np  # noqa: E402
import pytest  # noqa: E402

from ferro2spin.spin_core.generators import system_from_graph  # noqa: E402
from ferro2spin.spin_core.io import system_to_dict  # noqa: E402
from ferro2spin.spin_core.system import SpinParams  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def symmetric_params():
    """beta = gamma = 2, Delta_c = 3."""
    return SpinParams(2.0, 2.0)


@pytest.fixture
def ising_like_params():
    """beta = 1, gamma = 2: Delta_c = 5.8284, lambda_c = 10.6606."""
    return SpinParams(1.0, 2.0)


@pytest.fixture
def triangle(symmetric_params):
    return system_from_graph(symmetric_params, nx.cycle_graph(3), 1.0)


@pytest.fixture
def write_graph(tmp_path):
    """Write a SpinSystem as a graph document and return its path."""
    def _write(system, name='graph.json'):
        path = tmp_path / name
        path.write_text(json.dumps(system_to_dict(system)))
        return str(path)
    return _write
