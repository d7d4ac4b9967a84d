"""
감사 그래프에서 사용되는 유틸리티 함수
"""
from typing import Literal

from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.schema.audit import ClaimStatus

# 최대 판정 횟수
MAX_ADJUDICATION_ROUNDS = 1


def route_after_validation(state: AuditGraphState) -> Literal["adjudicate_claims", "return_final_report"]:
    """
    검증 결과에 따라 다음 노드를 결정하는 라우팅 함수

    Args:
        state: 현재 그래프 상태

    Returns:
        다음에 실행할 노드 이름
    """
    pending = any(result.status == ClaimStatus.DISCREPANCY for result in state["results"])
    if pending and state.get("adjudication_rounds", 0) < MAX_ADJUDICATION_ROUNDS:
        return "adjudicate_claims"
    return "return_final_report"
