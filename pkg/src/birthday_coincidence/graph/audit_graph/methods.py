"""
감사 그래프의 계산 방법 모음

EVALUATORS 는 라이브러리 함수로 값을 계산하고,
ADJUDICATORS 는 같은 값을 다른 방법 (DP 오라클, 정확한 EGF 재합산, 명시적 float 산술) 으로 다시 구합니다.
각 방법은 claim.args 를 키워드 인자로 받아 (값, 방법 이름) 또는 값을 반환합니다.
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Tuple

from birthday_coincidence.calc.bonferroni import bound_ladder, prob_some_triple_day, q_term
from birthday_coincidence.calc.doubles_exact import (
    conditional_doubles,
    doubles_factorial_moment,
    expected_doubles,
    hs_distribution,
    prob_no_crowded_day,
)
from birthday_coincidence.calc.mckinney import prob_no_r_repeat
from birthday_coincidence.calc.naive_baselines import (
    chatgpt_estimate,
    exact_no_pair,
    naive_pair,
    regmi_triple,
    successive_day_values,
)
from birthday_coincidence.calc.poisson_model import poisson_pmf, poisson_summary
from birthday_coincidence.calc.triples_exact import tau0, tau_k, truncated_tau0
from birthday_coincidence.oracle.dp import dp_law
from birthday_coincidence.schema.prob import Params, Statistic

AUDIT_TOL = Fraction(1, 10 ** 9)

Evaluator = Callable[..., float]
Adjudicator = Callable[..., Tuple[float, str]]


def _midpoint(bracket) -> float:
    return float((bracket[0] + bracket[1]) / 2)


EVALUATORS: Dict[str, Evaluator] = {
    "no_pair": lambda n, d: float(exact_no_pair(n, d)),
    "naive_power": lambda base, days, exponent: math.exp(exponent * math.log(base / days)),
    "naive_pair": lambda n, d: naive_pair(n, d),
    "chatgpt": lambda n, d: chatgpt_estimate(n, d),
    "regmi_no_triple": lambda n, d: regmi_triple(n, d)[0],
    "regmi_at_least_one": lambda n, d: regmi_triple(n, d)[1],
    "successive": lambda n, d, r, which: float(successive_day_values(n, d, r)[which].value),
    "at_least_r": lambda n, M, r: float(1 - prob_no_r_repeat(n, M, r)),
    "poisson_pm": lambda n, d, k: poisson_pmf(n / d, k),
    "poisson_expected": lambda n, d, k: d * poisson_pmf(n / d, k),
    "poisson_triple_day": lambda n, d: poisson_summary(Params(n=n, d=d)).prob_at_least_one_triple_day,
    "binomial_pm2": lambda n, d: float(expected_doubles(Params(n=n, d=d)) / d),
    "expected_doubles": lambda n, d: float(expected_doubles(Params(n=n, d=d))),
    "moment_ratio": lambda n, d: float(doubles_factorial_moment(Params(n=n, d=d))[1]),
    "sum_kpk": lambda n, d: float(hs_distribution(Params(n=n, d=d), verify=False).mean()),
    "sum_pk": lambda n, d: float(prob_no_crowded_day(Params(n=n, d=d))),
    "crowded_complement": lambda n, d: float(1 - prob_no_crowded_day(Params(n=n, d=d))),
    "conditional_mean": lambda n, d: float(conditional_doubles(Params(n=n, d=d))[1]),
    "q_term": lambda n, d, k: float(q_term(Params(n=n, d=d), k)),
    "ladder_sum": lambda n, d, m: float(bound_ladder(Params(n=n, d=d), m).partial_sums[m - 1]),
    "triple_day_prob": lambda n, d: _midpoint(prob_some_triple_day(Params(n=n, d=d), AUDIT_TOL)),
    "tau0": lambda n, d: _midpoint(tau0(Params(n=n, d=d), AUDIT_TOL)),
    "tau_k_truncated": lambda n, d, k, terms: float(tau_k(Params(n=n, d=d), k, AUDIT_TOL, terms).truncated_value),
    "one_minus_tau0_truncated": lambda n, d, terms: float(1 - truncated_tau0(Params(n=n, d=d), terms)),
}


# 독립 방법들

@lru_cache(maxsize=None)
def _dp_triples(n: int, d: int) -> Dict[int, Fraction]:
    return dict(dp_law(Params(n=n, d=d), Statistic.TRIPLES_COUNT).law.entries)


@lru_cache(maxsize=None)
def _egf_no_repeat(n: int, M: int, r: int) -> Fraction:
    """
    n! [x^n] (Σ_{c<r} x^c / c!)^M / M^n

    계수 a_k 를 n! · a_k 정수로 들고 다니며 거듭제곱을 이진 분해로 계산합니다.
    """
    scale = math.factorial(n)

    def multiply(left, right):
        product = [0] * (n + 1)
        for i, a in enumerate(left):
            if a:
                for j in range(n + 1 - i):
                    product[i + j] += a * right[j]
        return [value // scale for value in product]

    base = [scale // math.factorial(c) if c < r else 0 for c in range(n + 1)]
    result = [scale] + [0] * n
    power = M
    while power:
        if power & 1:
            result = multiply(result, base)
        power >>= 1
        if power:
            base = multiply(base, base)
    return Fraction(result[n], M ** n)


def _log_q(n: int, d: int, k: int) -> float:
    # log q_k(n,d) (lgamma 로 계산)
    log_choose = sum(
        math.lgamma(n - 3 * j + 1) - math.lgamma(n - 3 * j - 2) - math.lgamma(4) for j in range(k)
    )
    return (
        log_choose - math.lgamma(k + 1)
        + math.lgamma(d + 1) - math.lgamma(d - k + 1)
        + ((n - 3 * k) * math.log(d - k) if n > 3 * k else 0.0) - n * math.log(d)
    )


def _float_q(n: int, d: int, k: int) -> float:
    if 3 * k > n or k > d or (k == d and n > 3 * k):
        return 0.0
    return math.exp(_log_q(n, d, k))


def _float_ladder(n: int, d: int, m: int) -> float:
    return sum((-1) ** (k + 1) * _float_q(n, d, k) for k in range(1, m + 1))


def _float_hs(n: int, d: int):
    # log-space p_k 목록
    values = []
    for k in range(max(0, n - d), n // 2 + 1):
        log_choose = sum(
            math.log(math.comb(n - 2 * j, 2)) for j in range(k)
        )
        log_p = (
            log_choose - math.lgamma(k + 1)
            + math.lgamma(d + 1) - math.lgamma(d - (n - k) + 1) - n * math.log(d)
        )
        values.append((k, math.exp(log_p)))
    return values


def _poisson_direct(n: int, d: int, k: int) -> float:
    lam = n / d
    return math.exp(-lam) * lam ** k / math.factorial(k)


ADJUDICATORS: Dict[str, Adjudicator] = {
    "no_pair": lambda n, d: (math.exp(math.lgamma(d + 1) - math.lgamma(d - n + 1) - n * math.log(d)), "lgamma"),
    "naive_power": lambda base, days, exponent: (float(Fraction(base, days) ** exponent), "exact power"),
    "naive_pair": lambda n, d: (((d - 1) / d) ** math.comb(n, 2), "float power"),
    "chatgpt": lambda n, d: (
        1 - ((d - 1) / d) ** math.comb(n, 3) - ((d - 1) / d) ** n + ((d - 1) / d) ** math.comb(n, 2),
        "float power",
    ),
    "regmi_no_triple": lambda n, d: ((1 - 1 / d ** 2) ** math.comb(n, 3), "float power"),
    "regmi_at_least_one": lambda n, d: (1 - (1 - 1 / d ** 2) ** math.comb(n, 3), "float power"),
    "successive": lambda n, d, r, which: (math.comb(n - which * r, r) / d ** r, "float arithmetic"),
    "at_least_r": lambda n, M, r: (float(1 - _egf_no_repeat(n, M, r)), "exponential generating function"),
    "poisson_pm": lambda n, d, k: (_poisson_direct(n, d, k), "direct formula"),
    "poisson_expected": lambda n, d, k: (d * _poisson_direct(n, d, k), "direct formula"),
    "poisson_triple_day": lambda n, d: (1 - math.exp(-d * _poisson_direct(n, d, 3)), "direct formula"),
    "binomial_pm2": lambda n, d: (math.comb(n, 2) / d ** 2 * ((d - 1) / d) ** (n - 2), "float arithmetic"),
    "expected_doubles": lambda n, d: (math.comb(n, 2) / d * ((d - 1) / d) ** (n - 2), "float arithmetic"),
    "moment_ratio": lambda n, d: (math.comb(n - 2, 2) / (d - 1) * ((d - 2) / (d - 1)) ** (n - 4), "float arithmetic"),
    "sum_kpk": lambda n, d: (sum(k * p for k, p in _float_hs(n, d)), "lgamma"),
    "sum_pk": lambda n, d: (float(_egf_no_repeat(n, d, 3)), "exponential generating function"),
    "crowded_complement": lambda n, d: (float(1 - _egf_no_repeat(n, d, 3)), "exponential generating function"),
    "conditional_mean": lambda n, d: (
        sum(k * p for k, p in _float_hs(n, d)) / sum(p for _, p in _float_hs(n, d)),
        "lgamma",
    ),
    "q_term": lambda n, d, k: (_float_q(n, d, k), "lgamma"),
    "ladder_sum": lambda n, d, m: (_float_ladder(n, d, m), "lgamma"),
    "triple_day_prob": lambda n, d: (float(1 - _dp_triples(n, d).get(0, Fraction(0))), "dp oracle"),
    "tau0": lambda n, d: (float(_dp_triples(n, d).get(0, Fraction(0))), "dp oracle"),
    "tau_k_truncated": lambda n, d, k, terms: (
        _float_q(n, d, k) * (1 - _float_ladder(n - 3 * k, d - k, terms)), "lgamma"
    ),
    "one_minus_tau0_truncated": lambda n, d, terms: (_float_ladder(n, d, terms), "lgamma"),
}
