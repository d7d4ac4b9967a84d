# 계산 모듈 패키지 초기화 파일
from .exact_kernel import as_probability, binomial, falling_factorial, power_ratio, to_decimal
from .poisson_model import poisson_pmf, poisson_summary
from .bonferroni import bound_ladder, partial_sum, prob_some_triple_day, q_term, tail_bound
from .doubles_exact import (
    conditional_doubles,
    doubles_factorial_moment,
    expected_doubles,
    hs_distribution,
    hs_pk,
)
from .mckinney import enumerate_profiles, prob_no_r_repeat, profile_probability, threshold_n
from .triples_exact import tau0, tau_k, tau_table, truncated_tau0
from .simulator import figure1_simulated, simulate

__all__ = [
    "as_probability",
    "binomial",
    "falling_factorial",
    "power_ratio",
    "to_decimal",
    "poisson_pmf",
    "poisson_summary",
    "bound_ladder",
    "partial_sum",
    "prob_some_triple_day",
    "q_term",
    "tail_bound",
    "conditional_doubles",
    "doubles_factorial_moment",
    "expected_doubles",
    "hs_distribution",
    "hs_pk",
    "enumerate_profiles",
    "prob_no_r_repeat",
    "profile_probability",
    "threshold_n",
    "tau0",
    "tau_k",
    "tau_table",
    "truncated_tau0",
    "figure1_simulated",
    "simulate",
]
