# Orchestrator for the published-value audit
from typing import Optional, Sequence

from langgraph.graph import END, StateGraph

from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.graph.audit_graph.utils import route_after_validation
from birthday_coincidence.graph.audit_graph.nodes import (
    load_claims,
    evaluate_claims,
    validate_claims,
    adjudicate_claims,
    return_final_report
)
from birthday_coincidence.schema.state import AuditReport
from birthday_coincidence.utils.logger import get_logger


def build_audit_graph() -> StateGraph:
    """
    감사 그래프 구성하기

    플로우:
    1. 수치 로드 - 출판된 수치 목록을 로드합니다.
    2. 수치 계산 - 라이브러리로 각 수치를 계산합니다.
    3. 수치 검증 - 허용오차 안에 있는지 확인합니다.
    4. 조건부 분기:
       a. 허용오차를 벗어난 수치가 있고 판정 전 → 독립 방법으로 판정 후 다시 검증
       b. 모두 일치하거나 이미 판정함 → 최종 보고서 반환

    Returns:
        StateGraph: 구성된 감사 그래프
    """
    audit_graph = StateGraph(AuditGraphState)

    audit_graph.add_node("load_claims", load_claims)
    audit_graph.add_node("evaluate_claims", evaluate_claims)
    audit_graph.add_node("validate_claims", validate_claims)
    audit_graph.add_node("adjudicate_claims", adjudicate_claims)
    audit_graph.add_node("return_final_report", return_final_report)

    audit_graph.add_edge("load_claims", "evaluate_claims")
    audit_graph.add_edge("evaluate_claims", "validate_claims")

    audit_graph.add_conditional_edges(
        "validate_claims",
        route_after_validation,
        {
            "adjudicate_claims": "adjudicate_claims",
            "return_final_report": "return_final_report"
        }
    )

    # 판정 후 다시 검증 단계로
    audit_graph.add_edge("adjudicate_claims", "validate_claims")
    audit_graph.add_edge("return_final_report", END)

    audit_graph.set_entry_point("load_claims")

    return audit_graph


def get_audit_chain():
    """
    컴파일된 감사 그래프 반환

    Returns:
        컴파일된 감사 그래프 체인
    """
    graph = build_audit_graph()
    return graph.compile()


def run_audit(claim_ids: Optional[Sequence[str]] = None) -> AuditReport:
    """
    감사 그래프를 실행하고 최종 보고서를 반환합니다.

    Args:
        claim_ids: 감사할 수치 id 목록 (None 이면 전체)

    Returns:
        AuditReport
    """
    logger = get_logger(name="audit_graph")
    initial: AuditGraphState = {
        "claim_ids": list(claim_ids) if claim_ids is not None else None,
        "claims": [],
        "results": [],
        "adjudication_rounds": 0,
        "notes": [],
        "report": {},
    }
    final_state = get_audit_chain().invoke(initial)
    report = final_state["report"]
    logger.info(f"Audit finished: {report['summary']}")
    return report
