from .demo import example_demo
from .idealization import (
    PRONG_NOT_FP,
    PRONG_POWER,
    classify_ideals_inside_2_0,
    principal_2_0,
    refute_csfp,
    refute_finitely_presented,
    sample_claimed_syzygies,
)

__all__ = [
    "example_demo",
    "PRONG_NOT_FP",
    "PRONG_POWER",
    "classify_ideals_inside_2_0",
    "principal_2_0",
    "refute_csfp",
    "refute_finitely_presented",
    "sample_claimed_syzygies",
]
