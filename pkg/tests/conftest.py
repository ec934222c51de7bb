import os
import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "qtor",
    max_examples=int(os.environ.get("QTOR_MAX_EXAMPLES", "50")),
    deadline=None,
    derandomize="QTOR_SEED" not in os.environ,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qtor")


@pytest.fixture
def rng():
    return random.Random(int(os.environ.get("QTOR_SEED", "0")))
