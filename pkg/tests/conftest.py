import itertools

import pytest
from hypothesis import HealthCheck, settings

from catalania.diagram import Diagram, check_boundary

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def checked_diagrams(order, max_height):
    for hs in itertools.product(range(max_height + 1), repeat=order):
        d = Diagram(hs)
        if check_boundary(d):
            yield d


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("CATALANIA_CACHE", str(tmp_path / "cache"))
    return tmp_path / "cache"
