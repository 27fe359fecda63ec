"""
Seeded samplers for audit trials.

Distributions: generator count uniform in [MIN_GENS, MAX_GENS], integer
parts uniform in [-INT_BOUND, INT_BOUND], idealization supports inside
{1, ..., SUPPORT_BOUND}.
"""
from dataclasses import dataclass
from random import Random
from typing import Optional

from src.config import sampler_settings
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal
from src.rings.descriptors import IdealizationZF2, Ring
from src.rings.elements import Element, Vector


@dataclass(frozen=True)
class SamplerConfig:
    min_gens: int = sampler_settings.MIN_GENS
    max_gens: int = sampler_settings.MAX_GENS
    int_bound: int = sampler_settings.INT_BOUND
    support_bound: int = sampler_settings.SUPPORT_BOUND
    max_rank: int = 3

    def __post_init__(self) -> None:
        if not 0 <= self.min_gens <= self.max_gens:
            raise ValueError(f"Generator range [{self.min_gens}, {self.max_gens}] is empty")
        if self.int_bound < 0 or self.support_bound < 0 or self.max_rank < 1:
            raise ValueError("Sampler bounds must be non-negative and the rank at least 1")


def sample_element(ring: Ring, rng: Random, config: Optional[SamplerConfig] = None) -> Element:
    config = config or SamplerConfig()
    return ring.random_element(rng, config.int_bound, config.support_bound)


def sample_vector(ring: Ring, rng: Random, rank: int, config: Optional[SamplerConfig] = None) -> Vector:
    return tuple(sample_element(ring, rng, config) for _ in range(rank))


def sample_ideal(ring: Ring, rng: Random, config: Optional[SamplerConfig] = None) -> FinIdeal:
    config = config or SamplerConfig()
    count = rng.randint(config.min_gens, config.max_gens)
    return FinIdeal(ring, tuple(sample_element(ring, rng, config) for _ in range(count)))


def sample_split(ring: IdealizationZF2, rng: Random, config: Optional[SamplerConfig] = None) -> SplitIdeal:
    config = config or SamplerConfig()
    return SplitIdeal(ring, 2 * rng.randint(0, max(config.int_bound // 2, 1)))


def sample_rank(rng: Random, config: Optional[SamplerConfig] = None) -> int:
    config = config or SamplerConfig()
    return rng.randint(1, config.max_rank)


def sample_submodule(ring: Ring, rng: Random, rank: int, config: Optional[SamplerConfig] = None) -> FreeSubmodule:
    config = config or SamplerConfig()
    count = rng.randint(config.min_gens, config.max_gens)
    return FreeSubmodule(ring, rank, tuple(sample_vector(ring, rng, rank, config) for _ in range(count)))
