from .audits import chase_audit, colon_formula_audit, formula_audit_passed, s_noetherian_sample_check
from .coherence import fp_scoherent_cert, free_scoherent_cert
from .extensions import ExtensionData, ModuleMap, PullbackData, lift_all
from .lemmas import (
    cap_compose,
    compose_sfp,
    cs_implies_s_derivation,
    exccs_kernel_cert,
    kernel_s_finite,
    provenance,
    quotient_sfp,
    shrink_s,
    usfp_from_csfp,
)
from .sampling import SamplerConfig

__all__ = [
    "chase_audit",
    "colon_formula_audit",
    "formula_audit_passed",
    "s_noetherian_sample_check",
    "fp_scoherent_cert",
    "free_scoherent_cert",
    "ExtensionData",
    "ModuleMap",
    "PullbackData",
    "lift_all",
    "cap_compose",
    "compose_sfp",
    "cs_implies_s_derivation",
    "exccs_kernel_cert",
    "kernel_s_finite",
    "provenance",
    "quotient_sfp",
    "shrink_s",
    "usfp_from_csfp",
    "SamplerConfig",
]
