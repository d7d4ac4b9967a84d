import math

from birthday_coincidence.graph.audit_graph.methods import ADJUDICATORS
from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.schema.audit import ClaimStatus
from birthday_coincidence.utils.logger import get_logger

# 독립 방법과 라이브러리 값의 일치 기준
AGREEMENT_REL_TOL = 1e-6
AGREEMENT_ABS_TOL = 1e-9


def adjudicate_claims(state: AuditGraphState) -> dict:
    """
    허용오차를 벗어난 수치를 독립적인 방법으로 다시 계산합니다.

    독립 값이 라이브러리 값과 일치하면 출판값의 오류로 보고 adjudicated,
    일치하지 않으면 discrepancy 로 남기고 note 에 기록합니다.
    """
    logger = get_logger(name="audit_graph")
    adjudicated = []
    for result in state["results"]:
        if result.status != ClaimStatus.DISCREPANCY:
            adjudicated.append(result)
            continue

        claim = result.claim
        independent, method = ADJUDICATORS[claim.kind](**claim.args)
        confirmed = math.isclose(
            independent, result.computed, rel_tol=AGREEMENT_REL_TOL, abs_tol=AGREEMENT_ABS_TOL
        )
        if confirmed:
            note = claim.remark or f"published {claim.published} is inconsistent with {method}"
            status = ClaimStatus.ADJUDICATED
        else:
            note = f"{method} gives {independent}, library gives {result.computed}"
            status = ClaimStatus.DISCREPANCY
            logger.warning(f"{claim.claim_id}: independent check disagrees ({note})")
        adjudicated.append(result.model_copy(update={
            "independent": independent,
            "method": method,
            "status": status,
            "note": note,
        }))

    rounds = state.get("adjudication_rounds", 0) + 1
    logger.info(f"Adjudication round {rounds} finished")
    return {"results": adjudicated, "adjudication_rounds": rounds}
