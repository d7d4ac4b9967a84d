"""
비교용으로 유지하는 잘못된 공식들과, 사건들이 쌍별로는 독립이지만
완전 독립은 아님을 보이는 정확한 계산.

잘못된 공식은 (364/365)^161700 처럼 지수가 커서 log 공간의 float 로 계산합니다.
"""
import math
from fractions import Fraction
from typing import Tuple

from birthday_coincidence.calc.exact_kernel import as_probability, binomial, falling_factorial, power_ratio
from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.prob import DayValue, ExactProb, IndependenceReport
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="naive_baselines")

# 챗봇이 n=100 에 대해 제시한 값 (공식 자체를 계산하면 이 값이 나오지 않음)
CHATGPT_CLAIMED_VALUE = 0.527


def _check(n: int, d: int, min_n: int):
    if n < min_n:
        raise InvalidParamsError(f"n must be >= {min_n}, got {n}")
    if d < 1:
        raise InvalidParamsError(f"d must be >= 1, got {d}")


def _log_power(miss: float, exponent: int) -> float:
    """(1 - miss)^exponent 를 log 공간에서 계산 (0 <= miss <= 1)"""
    if exponent == 0:
        return 1.0
    if miss >= 1.0:
        return 0.0
    return math.exp(exponent * math.log1p(-miss))


def chatgpt_estimate(n: int, d: int) -> float:
    """
    1 - b^C(n,3) - b^n + b^C(n,2), b = (d-1)/d 를 인용된 그대로 계산합니다.
    """
    _check(n, d, 3)
    miss = 1.0 / d
    value = (
        1.0
        - _log_power(miss, binomial(n, 3))
        - _log_power(miss, n)
        + _log_power(miss, binomial(n, 2))
    )
    logger.debug(f"chatgpt formula n={n} d={d}: {value}")
    return value


def naive_pair(n: int, d: int) -> float:
    """((d-1)/d)^C(n,2): 쌍별 사건이 완전 독립이라는 잘못된 가정"""
    _check(n, d, 2)
    return _log_power(1.0 / d, binomial(n, 2))


def exact_no_pair(n: int, d: int) -> ExactProb:
    """비교용 정확한 값 P_{d,n}/d^n"""
    _check(n, d, 1)
    return as_probability(Fraction(falling_factorial(d, n), d ** n))


def regmi_triple(n: int, d: int) -> Tuple[float, float]:
    """
    (1 - 1/d^2)^C(n,3): 세 명 묶음들이 독립이라는 잘못된 가정

    Returns:
        (no_triple, at_least_one)
    """
    _check(n, d, 3)
    no_triple = _log_power(1.0 / (d * d), binomial(n, 3))
    return no_triple, 1.0 - no_triple


def independence_report(d: int) -> IndependenceReport:
    """
    A_{i,j} = i 와 j 의 생일이 같음.
    서로소인 두 쌍은 독립이지만 A_{1,2}, A_{2,3}, A_{3,1} 은 그렇지 않습니다.
    """
    if d < 2:
        raise InvalidParamsError(f"d must be >= 2, got {d}")
    return IndependenceReport(
        pair_joint=Fraction(1, d * d),
        pair_product=power_ratio(1, d, 2),
        # 두 쌍이 같으면 세 번째는 자동으로 성립
        triple_cycle_joint=Fraction(1, d * d),
        triple_cycle_product=power_ratio(1, d, 3),
    )


def successive_day_values(n: int, d: int, r: int) -> Tuple[DayValue, DayValue]:
    """
    C(n,r)/d^r 과 C(n-r,r)/d^r.

    기대 개수 형태의 값이라 1 을 넘을 수 있으며, 이 경우 exceeds_one 으로 표시합니다.
    "1일에 정확히 r명" 의 확률 C(n,r)(1/d)^r((d-1)/d)^(n-r) 와는 다릅니다.
    """
    if r not in (2, 3):
        raise InvalidParamsError(f"r must be 2 or 3, got {r}")
    _check(n, d, 2 * r)
    scale = d ** r
    first = Fraction(binomial(n, r), scale)
    second = Fraction(binomial(n - r, r), scale)
    return (
        DayValue(value=first, exceeds_one=first > 1),
        DayValue(value=second, exceeds_one=second > 1),
    )
