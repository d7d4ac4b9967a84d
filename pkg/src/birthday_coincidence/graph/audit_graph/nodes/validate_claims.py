from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.schema.audit import ClaimStatus
from birthday_coincidence.utils.logger import get_logger


def validate_claims(state: AuditGraphState) -> dict:
    """
    계산값이 출판값의 허용오차 안에 있는지 확인합니다.

    Returns:
        status 가 agrees 또는 discrepancy 로 정해진 results
    """
    logger = get_logger(name="audit_graph")
    validated = []
    for result in state["results"]:
        if result.status == ClaimStatus.ADJUDICATED:
            validated.append(result)
            continue
        agrees = result.claim.within(result.computed)
        status = ClaimStatus.AGREES if agrees else ClaimStatus.DISCREPANCY
        update = {"status": status}
        if agrees and result.claim.remark:
            # 허용오차 안에 있어도 계산 방식에 대한 설명은 남김
            update["note"] = result.claim.remark
        validated.append(result.model_copy(update=update))

    failed = [r.claim.claim_id for r in validated if r.status == ClaimStatus.DISCREPANCY]
    logger.info(f"Validation completed: {len(validated) - len(failed)} agree, {len(failed)} outside tolerance")
    # 판정 후 재검증에서는 메모를 다시 남기지 않음
    first_pass = not state.get("adjudication_rounds")
    notes = [f"outside tolerance: {', '.join(failed)}"] if failed and first_pass else []
    return {"results": validated, "notes": notes}
