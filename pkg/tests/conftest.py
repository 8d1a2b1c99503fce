import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # make `oracles` importable

SEED = int(os.environ.get("CIRCLERING_SEED", "20260810"))


@pytest.fixture
def rng():
    return random.Random(SEED)
