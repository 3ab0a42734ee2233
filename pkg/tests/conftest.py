from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from superx.groups import build_group
from superx.superext import build_lambda_table

_TABLE_CACHE: dict[str, object] = {}


@pytest.fixture(scope="session")
def lam_table():
    """Session-cached lambda tables keyed by group name."""

    def get(name: str):
        if name not in _TABLE_CACHE:
            _TABLE_CACHE[name] = build_lambda_table(build_group(name))
        return _TABLE_CACHE[name]

    return get


@pytest.fixture(scope="session")
def group():
    cache: dict[str, object] = {}

    def get(name: str):
        if name not in cache:
            cache[name] = build_group(name)
        return cache[name]

    return get
