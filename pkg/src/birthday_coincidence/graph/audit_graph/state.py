from typing import Annotated, List, Optional, TypedDict
import operator

from birthday_coincidence.schema.audit import ClaimResult, PublishedClaim
from birthday_coincidence.schema.state import AuditReport


class AuditGraphState(TypedDict):
    claim_ids: Annotated[Optional[List[str]], 'claim ids to audit (None = all)']
    claims: Annotated[List[PublishedClaim], 'published claims']
    results: Annotated[List[ClaimResult], 'per-claim results']
    adjudication_rounds: Annotated[int, 'adjudication count']
    notes: Annotated[List[str], operator.add]
    report: Annotated[AuditReport, 'final report']
