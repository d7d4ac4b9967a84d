# poetry run test-audit

import pytest

from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.graph.audit_graph.claims import (
    PUBLISHED_CLAIMS,
    TRUNCATION_REMARK,
    published_claim,
    select_claims,
)
from birthday_coincidence.graph.audit_graph.methods import ADJUDICATORS, EVALUATORS
from birthday_coincidence.graph.audit_graph.orchestrator import build_audit_graph, run_audit
from birthday_coincidence.graph.audit_graph.utils import route_after_validation
from birthday_coincidence.schema.audit import ClaimResult, ClaimStatus, PublishedClaim

AGREEING = ["no_pair", "poisson_pm3", "expected_doubles", "regmi_no_triple", "at_least_three"]
# 출판값이 틀렸고 독립 방법이 라이브러리 값을 확인하는 수치
SLIPS = [
    "q1", "chatgpt", "crowded_complement", "naive_pair_printed", "tau_q5", "u3", "v3",
    "mckinney_r3_below", "mckinney_r4_below", "poisson_expected_doubles",
]
# 네 번째 한계에서 멈춘 사다리로 계산된 표
FOUR_TERM = ["tau1", "tau2", "tau5", "one_minus_tau0_1", "one_minus_tau0_2", "one_minus_tau0_5"]


def _statuses(report):
    return {row["claim_id"]: row["status"] for row in report["rows"]}


def test_catalogue_is_consistent():
    ids = [claim.claim_id for claim in PUBLISHED_CLAIMS]
    assert len(ids) == len(set(ids))
    for claim in PUBLISHED_CLAIMS:
        assert claim.kind in EVALUATORS
        assert claim.kind in ADJUDICATORS


def test_select_claims():
    assert [c.claim_id for c in select_claims(["q2", "q1"])] == ["q2", "q1"]
    assert published_claim("tau0").published == 0.386
    with pytest.raises(InvalidParamsError):
        select_claims(["no_such_claim"])


def test_within_relative_and_absolute():
    absolute = PublishedClaim(claim_id="a", label="a", published=0.5, tolerance=1e-3, kind="no_pair")
    relative = PublishedClaim(claim_id="r", label="r", published=2e-6, tolerance=1e-3, relative=True, kind="no_pair")
    assert absolute.within(0.5009)
    assert not absolute.within(0.502)
    assert relative.within(2.001e-6)
    assert not relative.within(2.01e-6)


def test_routing():
    claim = published_claim("q1")
    pending = [ClaimResult(claim=claim, computed=0.93, status=ClaimStatus.DISCREPANCY)]
    assert route_after_validation({"results": pending, "adjudication_rounds": 0}) == "adjudicate_claims"
    assert route_after_validation({"results": pending, "adjudication_rounds": 1}) == "return_final_report"
    settled = [ClaimResult(claim=claim, computed=0.93, status=ClaimStatus.ADJUDICATED)]
    assert route_after_validation({"results": settled, "adjudication_rounds": 0}) == "return_final_report"


def test_graph_compiles():
    assert build_audit_graph().compile() is not None


def test_agreeing_claims():
    report = run_audit(AGREEING)
    assert set(_statuses(report).values()) == {ClaimStatus.AGREES.value}
    assert report["summary"] == {"total": 5, "agrees": 5, "adjudicated": 0, "discrepancy": 0}
    assert report["flagged"] == []
    assert report["notes"] == []


def test_printed_slips_are_adjudicated():
    report = run_audit(SLIPS)
    statuses = _statuses(report)
    assert all(statuses[claim_id] == ClaimStatus.ADJUDICATED.value for claim_id in SLIPS)
    assert sorted(report["flagged"]) == sorted(SLIPS)
    rows = {row["claim_id"]: row for row in report["rows"]}
    assert rows["q1"]["computed"] == pytest.approx(0.930145, abs=5e-6)
    assert rows["chatgpt"]["method"] == "float power"
    assert rows["crowded_complement"]["computed"] == pytest.approx(0.645865, abs=1e-6)
    assert rows["mckinney_r3_below"]["computed"] == pytest.approx(0.4994548506, abs=1e-9)
    assert rows["poisson_expected_doubles"]["method"] == "direct formula"
    assert len(report["notes"]) == 1


def test_four_term_tables_agree_with_truncation_note():
    report = run_audit(FOUR_TERM)
    assert report["summary"]["agrees"] == len(FOUR_TERM)
    assert report["flagged"] == []
    rows = {row["claim_id"]: row for row in report["rows"]}
    assert all(row["note"] == TRUNCATION_REMARK for row in rows.values())
    assert rows["tau1"]["computed"] == pytest.approx(0.383326, abs=2e-6)
    assert rows["one_minus_tau0_1"]["computed"] == pytest.approx(0.58789, abs=2e-5)


def test_four_term_adjudicators_match_library():
    for claim_id in FOUR_TERM:
        claim = published_claim(claim_id)
        computed = EVALUATORS[claim.kind](**claim.args)
        independent, method = ADJUDICATORS[claim.kind](**claim.args)
        assert method == "lgamma"
        assert independent == pytest.approx(computed, rel=1e-9)


@pytest.mark.slow
def test_full_audit():
    report = run_audit()
    statuses = _statuses(report)
    assert report["summary"]["total"] == len(PUBLISHED_CLAIMS)
    assert report["summary"]["discrepancy"] == 0
    assert statuses["tau0"] == ClaimStatus.ADJUDICATED.value
    assert statuses["triple_day"] == ClaimStatus.ADJUDICATED.value
    assert all(statuses[claim_id] == ClaimStatus.AGREES.value for claim_id in FOUR_TERM)


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
