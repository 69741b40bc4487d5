import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repro",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

SEED = int(os.environ.get("CCODE_SEED", "20260810"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)
