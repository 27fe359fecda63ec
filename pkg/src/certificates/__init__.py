from .models import Certificate, CertificateKind, CSFPCert, SFiniteCert, SFPCert, USFPCert
from .mult_set import MultSet, standard_mult_set
from .schemas import dump_certificate, load_certificate
from .search import find_csfp, find_s_finite, find_usfp, trivial_s_finite
from .verify import ensure_verified, verify, verify_csfp, verify_s_finite, verify_sfp, verify_usfp

__all__ = [
    "Certificate",
    "CertificateKind",
    "CSFPCert",
    "SFiniteCert",
    "SFPCert",
    "USFPCert",
    "MultSet",
    "standard_mult_set",
    "dump_certificate",
    "load_certificate",
    "find_csfp",
    "find_s_finite",
    "find_usfp",
    "trivial_s_finite",
    "ensure_verified",
    "verify",
    "verify_csfp",
    "verify_s_finite",
    "verify_sfp",
    "verify_usfp",
]
