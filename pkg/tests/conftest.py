from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mutalg.classes import class_of_type
from mutalg.diagram import DynkinType


@pytest.fixture(scope="session")
def classes_by_type():
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = class_of_type(DynkinType.parse(name))
        return cache[name]

    return get
