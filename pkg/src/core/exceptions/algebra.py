class AlgebraError(Exception):
    """Base exception for every error raised by the toolkit"""
    pass


class RingMismatchError(AlgebraError):
    """Raised when values from two different rings are combined"""

    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right
        super().__init__(f"Cannot combine values from ring '{left}' with ring '{right}'")


class UnsupportedRingError(AlgebraError):
    """Raised when a computation has no closed form for the given ring"""

    def __init__(self, ring: str, operation: str):
        self.ring = ring
        self.operation = operation
        super().__init__(f"Operation '{operation}' is not supported over ring '{ring}'")


class InconclusiveError(AlgebraError):
    """Raised when a bounded search ends without an answer"""

    def __init__(self, what: str, budget: int):
        self.what = what
        self.budget = budget
        super().__init__(f"Inconclusive within budget {budget}: {what}")


class InvalidClaimError(AlgebraError):
    """Raised when user-supplied data does not satisfy the stated claim"""

    def __init__(self, claim: str, reason: str):
        self.claim = claim
        self.reason = reason
        super().__init__(f"Invalid claim '{claim}': {reason}")


class NotExactError(InvalidClaimError):
    """Raised when the maps of an extension do not form a short exact sequence"""

    def __init__(self, reason: str):
        super().__init__("short exact sequence", reason)


class CertificateError(AlgebraError):
    """Raised when a freshly built certificate fails its own verifier"""

    def __init__(self, kind: str, failures: list[str]):
        self.kind = kind
        self.failures = failures
        super().__init__(f"Emitted {kind} certificate does not verify: {', '.join(failures)}")


class LiteralParseError(AlgebraError):
    """Raised when an element, vector or ideal literal cannot be parsed"""

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        pointer = " " * position + "^"
        super().__init__(f"Expected {expected} at position {position}:\n  {text}\n  {pointer}")
