from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, Field


class ClaimStatus(str, Enum):
    """검증 결과 상태"""
    AGREES = "agrees"
    DISCREPANCY = "discrepancy"
    ADJUDICATED = "adjudicated"


class PublishedClaim(BaseModel):
    """출판된 수치 하나와 그 값을 계산하는 방법"""
    claim_id: str
    label: str
    published: float
    tolerance: float = Field(gt=0)
    relative: bool = Field(default=False, description="tolerance is relative to the published value")
    kind: str = Field(description="evaluator key")
    args: Dict[str, int] = Field(default_factory=dict)
    remark: str = ""

    def within(self, computed: float) -> bool:
        scale = abs(self.published) if self.relative else 1.0
        return abs(computed - self.published) <= self.tolerance * scale


class ClaimResult(BaseModel):
    """하나의 수치에 대한 계산 및 판정 결과"""
    claim: PublishedClaim
    computed: float
    status: ClaimStatus
    independent: Optional[float] = None
    method: Optional[str] = None
    note: str = ""
