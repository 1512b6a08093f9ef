import random

import pytest
from hypothesis import settings, strategies as st

from thompson.randgen import random_antichain, random_element

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def antichains(draw, max_leaves=12):
    seed = draw(st.integers(0, 2**32))
    n = draw(st.integers(1, max_leaves))
    return random_antichain(random.Random(seed), n)


@st.composite
def elements(draw, max_leaves=10, profile="general"):
    return random_element(draw(st.integers(0, 2**32)), max_leaves, profile)


@st.composite
def incomparable_triples(draw, max_leaves=12):
    seed = draw(st.integers(0, 2**32))
    rng = random.Random(seed)
    leaves = random_antichain(rng, rng.randint(3, max_leaves))
    return tuple(rng.sample(leaves, 3))


@pytest.fixture
def rng():
    return random.Random(12345)
