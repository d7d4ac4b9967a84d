from typing import Dict, List, TypedDict


# 감사 보고서 요약
class AuditSummary(TypedDict, total=False):
    total: int
    agrees: int
    adjudicated: int
    discrepancy: int


# 보고서 행 (출력용 평탄화)
class AuditRow(TypedDict, total=False):
    claim_id: str
    label: str
    published: float
    computed: float
    independent: float
    status: str
    method: str
    note: str


class AuditReport(TypedDict, total=False):
    summary: AuditSummary
    rows: List[AuditRow]
    flagged: List[str]
    notes: List[str]
    params: Dict[str, int]
