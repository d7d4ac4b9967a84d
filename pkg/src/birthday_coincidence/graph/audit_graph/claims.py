"""
감사 대상 수치 목록

출판된 글에 인쇄된 수치들을 (계산 방법, 인자, 허용오차) 와 함께 정의합니다.
허용오차는 인쇄된 마지막 자릿수의 반올림 범위를 기준으로 잡았습니다.
"""
from typing import Dict, List, Optional, Sequence

from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.audit import PublishedClaim

REFERENCE = {"n": 100, "d": 365}

# τ 표는 축소 인스턴스의 사다리를 네 번째 한계에서 멈춘 값
TRUNCATION_REMARK = "ladder stopped at the fourth bound; differs from the exact value by truncation"


def _claim(claim_id: str, label: str, published: float, tolerance: float, kind: str,
           relative: bool = False, remark: str = "", **args: int) -> PublishedClaim:
    return PublishedClaim(
        claim_id=claim_id,
        label=label,
        published=published,
        tolerance=tolerance,
        relative=relative,
        kind=kind,
        args=args or dict(REFERENCE),
        remark=remark,
    )


PUBLISHED_CLAIMS: List[PublishedClaim] = [
    # 단순 공식과 정확한 값
    _claim("no_pair", "P(no shared birthday) = P_{365,100}/365^100", 3.072e-7, 5e-4, "no_pair", relative=True),
    _claim(
        "naive_pair_printed", "(354/365)^C(100,2)", 1.265e-6, 1e-3, "naive_power", relative=True,
        remark="printed base is 354/365; the printed number is (364/365)^4950",
        base=354, days=365, exponent=4950,
    ),
    _claim("naive_pair", "(364/365)^C(100,2)", 1.265e-6, 1e-3, "naive_pair", relative=True),
    _claim(
        "chatgpt", "chatbot formula for at least three sharing", 0.527, 5e-4, "chatgpt",
        remark="the quoted formula evaluates to about 0.24",
    ),
    _claim("regmi_no_triple", "(1 - 1/365^2)^C(100,3)", 0.29708, 5e-5, "regmi_no_triple"),
    _claim("regmi_at_least_one", "1 - (1 - 1/365^2)^C(100,3)", 0.70292, 5e-5, "regmi_at_least_one"),
    _claim("b2_first", "P(B^2_1) = C(100,2)/365^2", 0.037155, 1e-6, "successive", n=100, d=365, r=2, which=0),
    _claim("b2_second", "P(B^2_2 | B^2_1) = C(98,2)/365^2", 0.035676, 1e-6, "successive", n=100, d=365, r=2, which=1),
    _claim("b3_first", "P(B^3_1) = C(100,3)/365^3", 0.003325, 1e-6, "successive", n=100, d=365, r=3, which=0),
    _claim("b3_second", "P(B^3_2 | B^3_1) = C(97,3)/365^3", 0.003032, 1e-6, "successive", n=100, d=365, r=3, which=1),
    _claim("at_least_three", "P(at least 3 share a birthday)", 0.6459, 1e-4, "at_least_r", n=100, M=365, r=3),

    # Poisson 근사
    _claim("poisson_pm3", "P(Poisson(100/365) = 3)", 0.002606, 5e-7, "poisson_pm", n=100, d=365, k=3),
    _claim("poisson_expected_triples", "365 * pm3", 0.9512, 5e-5, "poisson_expected", n=100, d=365, k=3),
    _claim("poisson_triple_day", "1 - exp(-365 pm3)", 0.6137, 5e-5, "poisson_triple_day"),
    _claim("poisson_pm2", "P(Poisson(100/365) = 2)", 0.028536, 5e-6, "poisson_pm", n=100, d=365, k=2),
    _claim(
        "poisson_expected_doubles", "365 * pm2", 10.415, 5e-4, "poisson_expected", n=100, d=365, k=2,
        remark="printed value is truncated; 365 pm2 = 10.415793",
    ),

    # 2중 생일
    _claim("binomial_pm2", "P(Binomial(100, 1/365) = 2)", 0.028396, 5e-6, "binomial_pm2"),
    _claim("expected_doubles", "E[D]", 10.3645, 5e-5, "expected_doubles"),
    _claim("moment_ratio", "E[D(D-1)] / E[D]", 10.027, 5e-4, "moment_ratio"),
    _claim("sum_kpk", "sum_k k p_k", 3.87454, 1e-5, "sum_kpk"),
    _claim("sum_pk", "sum_k p_k = P(no day with 3 or more)", 0.354135, 1e-6, "sum_pk"),
    _claim(
        "crowded_complement", "1 - sum_k p_k", 0.6549, 1e-4, "crowded_complement",
        remark="printed as 1 - 0.6549; the complement is 0.645865",
    ),
    _claim("conditional_mean", "E[D | no day with 3 or more]", 10.941, 1e-3, "conditional_mean"),

    # 포함-배제 항과 Bonferroni 사다리
    _claim("q1", "q_1", 0.931045, 1e-4, "q_term", relative=True, n=100, d=365, k=1,
           remark="digits transposed; q_1 - q_2 = 0.530545 implies q_1 = 0.930145"),
    _claim("q2", "q_2", 0.3996, 1e-3, "q_term", relative=True, n=100, d=365, k=2),
    _claim("q3", "q_3", 0.1054, 1e-3, "q_term", relative=True, n=100, d=365, k=3),
    _claim("q4", "q_4", 0.019153181, 1e-3, "q_term", relative=True, n=100, d=365, k=4),
    _claim("q5", "q_5", 2.548039e-3, 1e-3, "q_term", relative=True, n=100, d=365, k=5),
    _claim("q6", "q_6", 2.57641e-4, 1e-3, "q_term", relative=True, n=100, d=365, k=6),
    _claim("v1", "lower bound v_1 = q_1 - q_2", 0.530545, 5e-4, "ladder_sum", n=100, d=365, m=2),
    _claim("u2", "upper bound u_2 = v_1 + q_3", 0.635962, 5e-4, "ladder_sum", n=100, d=365, m=3),
    _claim("v2", "lower bound v_2 = u_2 - q_4", 0.616809, 5e-4, "ladder_sum", n=100, d=365, m=4),
    _claim("u3", "upper bound u_3 = v_2 + q_5", 0.614261, 5e-4, "ladder_sum", n=100, d=365, m=5,
           remark="v_2 + q_5 = 0.619357"),
    _claim("v3", "lower bound v_3 = u_3 - q_6", 0.614004, 5e-4, "ladder_sum", n=100, d=365, m=6),
    _claim("triple_day", "P(some day with exactly 3), six terms", 0.6140, 1e-4, "triple_day_prob"),

    # 점유 프로파일 임계값
    _claim("mckinney_r2_below", "P(G_2), n=22", 0.4758, 2e-4, "at_least_r", n=22, M=365, r=2),
    _claim("mckinney_r2_at", "P(G_2), n=23", 0.5074, 2e-4, "at_least_r", n=23, M=365, r=2),
    _claim("mckinney_r3_below", "P(G_3), n=87", 0.4998, 2e-4, "at_least_r", n=87, M=365, r=3,
           remark="exact occupancy sum gives 0.499455"),
    _claim("mckinney_r3_at", "P(G_3), n=88", 0.5114, 2e-4, "at_least_r", n=88, M=365, r=3,
           remark="exact occupancy sum gives 0.511065"),
    _claim("mckinney_r4_below", "P(G_4), n=186", 0.4758, 2e-4, "at_least_r", n=186, M=365, r=4,
           remark="repeats the r=2 entry"),
    _claim("mckinney_r4_at", "P(G_4), n=187", 0.5033, 2e-4, "at_least_r", n=187, M=365, r=4,
           remark="exact occupancy sum gives 0.502685"),

    # 3중 생일 수 T 의 분포
    _claim("tau0", "tau_0(100,365)", 0.386, 5e-4, "tau0", n=100, d=365,
           remark="simulation column gives 0.380921"),
    _claim("tau1", "tau_1(100,365), four terms", 0.38325, 5e-4, "tau_k_truncated", n=100, d=365, k=1, terms=4,
           remark=TRUNCATION_REMARK),
    _claim("tau2", "tau_2(100,365), four terms", 0.17672, 5e-4, "tau_k_truncated", n=100, d=365, k=2, terms=4,
           remark=TRUNCATION_REMARK),
    _claim("tau3", "tau_3(100,365), four terms", 0.049843, 5e-4, "tau_k_truncated", n=100, d=365, k=3, terms=4,
           remark=TRUNCATION_REMARK),
    _claim("tau4", "tau_4(100,365), four terms", 0.009656, 5e-4, "tau_k_truncated", n=100, d=365, k=4, terms=4,
           remark=TRUNCATION_REMARK),
    _claim("tau5", "tau_5(100,365), four terms", 0.001365, 5e-4, "tau_k_truncated", n=100, d=365, k=5, terms=4,
           remark=TRUNCATION_REMARK),
    _claim("tau_q1", "table q_1", 0.93014, 1e-4, "q_term", relative=True, n=100, d=365, k=1),
    _claim("tau_q2", "table q_2", 0.39960, 1e-3, "q_term", relative=True, n=100, d=365, k=2),
    _claim("tau_q3", "table q_3", 0.10542, 1e-3, "q_term", relative=True, n=100, d=365, k=3),
    _claim("tau_q4", "table q_4", 0.019153, 1e-3, "q_term", relative=True, n=100, d=365, k=4),
    _claim("tau_q5", "table q_5", 2.548e-4, 1e-3, "q_term", relative=True, n=100, d=365, k=5,
           remark="exponent slip; q_5 = 2.548e-3"),
    _claim("one_minus_tau0_1", "1 - tau_0(97,364), four terms", 0.58796, 5e-4, "one_minus_tau0_truncated",
           n=97, d=364, terms=4, remark=TRUNCATION_REMARK),
    _claim("one_minus_tau0_2", "1 - tau_0(94,363), four terms", 0.55777, 5e-4, "one_minus_tau0_truncated",
           n=94, d=363, terms=4, remark=TRUNCATION_REMARK),
    _claim("one_minus_tau0_3", "1 - tau_0(91,362), four terms", 0.52719, 5e-4, "one_minus_tau0_truncated",
           n=91, d=362, terms=4, remark=TRUNCATION_REMARK),
    _claim("one_minus_tau0_4", "1 - tau_0(88,361), four terms", 0.49585, 5e-4, "one_minus_tau0_truncated",
           n=88, d=361, terms=4, remark=TRUNCATION_REMARK),
    _claim("one_minus_tau0_5", "1 - tau_0(85,360), four terms", 0.46415, 5e-4, "one_minus_tau0_truncated",
           n=85, d=360, terms=4, remark=TRUNCATION_REMARK),
]

_BY_ID: Dict[str, PublishedClaim] = {claim.claim_id: claim for claim in PUBLISHED_CLAIMS}


def select_claims(claim_ids: Optional[Sequence[str]] = None) -> List[PublishedClaim]:
    """
    claim_ids 순서대로 수치를 고릅니다 (None 이면 전체 목록).

    Raises:
        InvalidParamsError: 알 수 없는 claim_id
    """
    if claim_ids is None:
        return list(PUBLISHED_CLAIMS)
    unknown = [claim_id for claim_id in claim_ids if claim_id not in _BY_ID]
    if unknown:
        raise InvalidParamsError(f"unknown claim ids: {', '.join(unknown)}")
    return [_BY_ID[claim_id] for claim_id in claim_ids]


def published_claim(claim_id: str) -> PublishedClaim:
    """id 로 수치 하나를 찾습니다."""
    return select_claims([claim_id])[0]
