import os

import pytest
from hypothesis import HealthCheck, settings

from simplicial_lines.utils.graphs import SimpleGraph, make_graph

settings.register_profile("fast", max_examples=25)
settings.register_profile(
    "ci", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture
def triangle_with_pendant() -> SimpleGraph:
    return make_graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """Isolated settings directory; the CLI reads it through HOME."""
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.delenv("SL_MAX_FACETS", raising=False)
    monkeypatch.delenv("SL_LOG_LEVEL", raising=False)
    path = tmp_path / ".config" / "simplicial-lines"
    path.mkdir(parents=True)
    return path
