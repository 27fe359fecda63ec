from .base import CamelModel, CommandResult
from .reports import (
    AuditReport,
    ConditionStats,
    DemoReport,
    DemoStep,
    Discrepancy,
    Obligation,
    RefutationTrace,
    TrialOutcome,
    VerifyReport,
    VerifyStatus,
)

__all__ = [
    "CamelModel",
    "CommandResult",
    "AuditReport",
    "ConditionStats",
    "DemoReport",
    "DemoStep",
    "Discrepancy",
    "Obligation",
    "RefutationTrace",
    "TrialOutcome",
    "VerifyReport",
    "VerifyStatus",
]
