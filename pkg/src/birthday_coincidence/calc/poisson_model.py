"""
Poisson 근사: 하루에 태어난 사람 수 ~ Binomial(n, 1/d) ≈ Poisson(n/d)

근사이므로 배정밀도 float 만 사용합니다.
"""
import math

from scipy.stats import poisson

from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.prob import Params, PoissonSummary
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="poisson_model")


def poisson_pmf(mean: float, k: int) -> float:
    """
    e^(-mean) mean^k / k!

    Args:
        mean: Poisson 평균 (> 0)
        k: 음이 아닌 정수

    Returns:
        확률 질량
    """
    if mean <= 0:
        raise InvalidParamsError(f"Poisson mean must be positive, got {mean}")
    if k < 0:
        raise InvalidParamsError(f"k must be non-negative, got {k}")
    return float(poisson.pmf(k, mean))


def poisson_summary(p: Params) -> PoissonSummary:
    """
    하루 2명/3명 확률, 2중/3중 생일 날 수의 기대값,
    그리고 날들이 독립이라고 가정했을 때 3중 생일이 하나 이상 있을 확률.
    """
    lam = p.n / p.d
    pm2 = poisson_pmf(lam, 2)
    pm3 = poisson_pmf(lam, 3)
    expected_triples = p.d * pm3
    summary = PoissonSummary(
        mean_per_day=lam,
        pm2=pm2,
        pm3=pm3,
        expected_doubles=p.d * pm2,
        expected_triples=expected_triples,
        prob_at_least_one_triple_day=-math.expm1(-expected_triples),
    )
    logger.debug(f"poisson summary n={p.n} d={p.d}: {summary}")
    return summary
