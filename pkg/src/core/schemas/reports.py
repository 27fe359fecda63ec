from enum import Enum
from typing import Optional

from pydantic import Field, model_validator

from src.core.schemas.base import CamelModel


class VerifyStatus(str, Enum):
    """Enum for verification outcomes"""
    VERIFIED = "verified"
    FAILED = "failed"


class Obligation(CamelModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(CamelModel):
    kind: str
    status: VerifyStatus
    obligations: list[Obligation] = []

    @property
    def ok(self) -> bool:
        return self.status == VerifyStatus.VERIFIED

    @property
    def failures(self) -> list[str]:
        return [o.name for o in self.obligations if not o.passed]

    @classmethod
    def from_obligations(cls, kind: str, obligations: list[Obligation]) -> "VerifyReport":
        status = VerifyStatus.VERIFIED if all(o.passed for o in obligations) else VerifyStatus.FAILED
        return cls(kind=kind, status=status, obligations=obligations)


class TrialOutcome(str, Enum):
    """Enum for the result of one audit trial on one condition"""
    CERTIFIED = "certified"
    FAILED = "failed"
    INCONCLUSIVE = "inconclusive"


class ConditionStats(CamelModel):
    condition: str
    trials: int = 0
    certified: int = 0
    failed: int = 0
    inconclusive: int = 0
    max_s_exponent: int = 0
    nontrivial_s: int = 0

    @model_validator(mode="after")
    def _counts_sum_to_trials(self) -> "ConditionStats":
        if self.certified + self.failed + self.inconclusive != self.trials:
            raise ValueError(f"Counts for '{self.condition}' do not sum to {self.trials} trials")
        return self


class Discrepancy(CamelModel):
    trial: int
    condition: str
    detail: str


class AuditReport(CamelModel):
    audit: str
    ring: str
    sset: str
    seed: int
    trials: int
    conditions: list[ConditionStats] = []
    discrepancies: list[Discrepancy] = []

    @property
    def passed(self) -> bool:
        return all(c.failed == 0 and c.inconclusive == 0 for c in self.conditions)


class RefutationTrace(CamelModel):
    claim: str
    prong: Optional[str] = None
    witness: str
    checks: list[Obligation] = []
    refuted: bool

    @classmethod
    def from_checks(cls, claim: str, witness: str, checks: list[Obligation], prong: Optional[str] = None) -> "RefutationTrace":
        return cls(claim=claim, prong=prong, witness=witness, checks=checks, refuted=all(c.passed for c in checks))


class DemoStep(CamelModel):
    name: str
    passed: bool
    detail: str = ""
    data: dict[str, str] = Field(default_factory=dict)


class DemoReport(CamelModel):
    steps: list[DemoStep] = []
    passed: bool
