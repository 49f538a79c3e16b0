import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from xdiscord.xstates import XClass, random_x_state

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def seeded_states(xclass, n, seed, real=False):
    rng = np.random.default_rng(seed)
    return [random_x_state(xclass, rng, real=real) for _ in range(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def class1_states():
    return seeded_states(XClass.CLASS1, 200, 101)


@pytest.fixture(scope="session")
def class2_states():
    return seeded_states(XClass.CLASS2, 200, 202)
