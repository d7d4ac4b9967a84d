from birthday_coincidence.graph.audit_graph.methods import EVALUATORS
from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.schema.audit import ClaimResult, ClaimStatus
from birthday_coincidence.utils.logger import get_logger


def evaluate_claims(state: AuditGraphState) -> dict:
    """
    각 수치를 라이브러리 함수로 계산합니다. 판정은 validate_claims 에서 합니다.
    """
    logger = get_logger(name="audit_graph")
    results = []
    for claim in state["claims"]:
        computed = EVALUATORS[claim.kind](**claim.args)
        logger.debug(f"{claim.claim_id}: published={claim.published} computed={computed}")
        # 임시 상태, validate_claims 에서 확정
        results.append(ClaimResult(claim=claim, computed=computed, status=ClaimStatus.AGREES))
    return {"results": results}
