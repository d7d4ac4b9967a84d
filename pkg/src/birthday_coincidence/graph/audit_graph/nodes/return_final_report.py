from collections import Counter

from birthday_coincidence.graph.audit_graph.state import AuditGraphState
from birthday_coincidence.schema.audit import ClaimStatus
from birthday_coincidence.schema.state import AuditReport


def return_final_report(state: AuditGraphState) -> dict:
    """판정 결과를 요약한 최종 보고서를 만듭니다."""
    counts = Counter(result.status.value for result in state["results"])
    rows = []
    for result in state["results"]:
        row = {
            "claim_id": result.claim.claim_id,
            "label": result.claim.label,
            "published": result.claim.published,
            "computed": result.computed,
            "status": result.status.value,
            "note": result.note,
        }
        if result.independent is not None:
            row["independent"] = result.independent
            row["method"] = result.method
        rows.append(row)

    report: AuditReport = {
        "summary": {
            "total": len(rows),
            "agrees": counts.get(ClaimStatus.AGREES.value, 0),
            "adjudicated": counts.get(ClaimStatus.ADJUDICATED.value, 0),
            "discrepancy": counts.get(ClaimStatus.DISCREPANCY.value, 0),
        },
        "rows": rows,
        "flagged": [r.claim.claim_id for r in state["results"] if r.status != ClaimStatus.AGREES],
        "notes": list(state.get("notes", [])),
    }
    return {"report": report}
