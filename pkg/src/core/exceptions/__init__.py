from .algebra import (
    AlgebraError,
    CertificateError,
    InconclusiveError,
    InvalidClaimError,
    LiteralParseError,
    NotExactError,
    RingMismatchError,
    UnsupportedRingError,
)

__all__ = [
    "AlgebraError",
    "CertificateError",
    "InconclusiveError",
    "InvalidClaimError",
    "LiteralParseError",
    "NotExactError",
    "RingMismatchError",
    "UnsupportedRingError",
]
