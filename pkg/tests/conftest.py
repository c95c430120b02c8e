import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from salemlat.isometry import suite_seed as _suite_seed


@pytest.fixture(scope="session")
def suite_seed() -> int:
    return _suite_seed()
