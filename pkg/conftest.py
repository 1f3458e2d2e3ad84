from functools import lru_cache

import pytest

from group import build_group
from power_graph import build_power_graph, twin_reduce


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: whole-corpus and exhaustive checks')


@lru_cache(maxsize=None)
def _group(spec: str):
    return build_group(spec)


@lru_cache(maxsize=None)
def _graph(spec: str, proper: bool):
    return build_power_graph(_group(spec), proper=proper)


@lru_cache(maxsize=None)
def _reduced(spec: str, proper: bool):
    return twin_reduce(_graph(spec, proper))


@pytest.fixture(scope='session')
def group():
    """Builds (and caches) a group from its spec text"""
    return _group


@pytest.fixture(scope='session')
def power_graph():
    def build(spec: str, proper: bool = False):
        return _graph(spec, proper)
    return build


@pytest.fixture(scope='session')
def reduced_graph():
    def build(spec: str, proper: bool = False):
        return _reduced(spec, proper)
    return build
