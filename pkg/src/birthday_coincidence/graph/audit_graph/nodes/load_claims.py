from birthday_coincidence.graph.audit_graph.claims import select_claims
from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.utils.logger import get_logger


def load_claims(state: AuditGraphState) -> dict:
    """
    감사할 출판 수치 목록을 로드합니다.

    Args:
        state: 현재 상태 (claim_ids 가 None 이면 전체 목록)

    Returns:
        claims 가 채워진 부분 상태
    """
    logger = get_logger(name="audit_graph")
    claims = select_claims(state.get("claim_ids"))
    logger.info(f"Loaded {len(claims)} published claims")
    return {"claims": claims, "adjudication_rounds": 0}
