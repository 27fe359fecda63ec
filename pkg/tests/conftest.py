import random

import pytest
from loguru import logger

from src.certificates.mult_set import MultSet, standard_mult_set
from src.rings.descriptors import IdealizationZF2, Integers, ModularIntegers, ring_from_spec


@pytest.fixture(autouse=True)
def quiet_logger():
    logger.remove()
    yield


@pytest.fixture
def zz() -> Integers:
    return Integers()


@pytest.fixture
def z12() -> ModularIntegers:
    return ModularIntegers(12)


@pytest.fixture
def idealization() -> IdealizationZF2:
    return IdealizationZF2()


@pytest.fixture(params=["z", "zmod:12", "idealization"])
def any_ring(request):
    return ring_from_spec(request.param)


@pytest.fixture
def s_2_0(idealization) -> MultSet:
    return standard_mult_set(idealization)


@pytest.fixture
def s_two(zz) -> MultSet:
    return standard_mult_set(zz)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)
