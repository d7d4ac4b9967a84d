"""
2중 생일 날 수 D 의 정확한 분포와 모멘트

p_k = P(정확히 k 개의 2중 생일, 3명 이상인 날 없음)
    = (1/k!) Π_{j<k} C(n-2j, 2) · P_{d,n-k} / d^n

Σ p_k 는 "3명 이상인 날이 없음" 의 확률이며, "정확히 3명인 날이 없음" (T=0) 과는 다릅니다.
두 값은 이름을 달리해서 따로 제공합니다 (triples_exact.tau0 참조).
"""
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from birthday_coincidence.calc.exact_kernel import binomial, falling_factorial
from birthday_coincidence.calc.poisson_model import poisson_pmf
from birthday_coincidence.errors import DegenerateInputError, InvalidParamsError
from birthday_coincidence.schema.prob import DistributionTable, ExactProb, Params, Provenance
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="doubles_exact")


def expected_doubles(p: Params) -> Fraction:
    """E[D] = C(n,2) (1/d) ((d-1)/d)^(n-2)"""
    if p.n < 2:
        raise InvalidParamsError(f"expected_doubles needs n >= 2, got {p.n}")
    return Fraction(binomial(p.n, 2) * (p.d - 1) ** (p.n - 2), p.d ** (p.n - 1))


def doubles_factorial_moment(p: Params) -> Tuple[Fraction, Optional[Fraction]]:
    """
    두 번째 계승 모멘트 E[D(D-1)] 와 비율 E[D(D-1)]/E[D].

    E[D(D-1)] = C(n,2)(1/d) · C(n-2,2)((d-1)/d^2) · ((d-2)/d)^(n-4)
    Poisson 이라면 E[D(D-1)] = (E[D])^2 이어야 합니다.

    Returns:
        (moment, ratio); E[D] = 0 이면 ratio 는 None
    """
    if p.n < 4:
        raise InvalidParamsError(f"doubles_factorial_moment needs n >= 4, got {p.n}")
    n, d = p.n, p.d
    pairs = binomial(n, 2) * binomial(n - 2, 2)
    moment = Fraction(pairs * (d - 1) * (d - 2) ** (n - 4), d ** (n - 1))
    mean = expected_doubles(p)
    ratio = moment / mean if mean != 0 else None
    return moment, ratio


def _support(n: int, d: int) -> Tuple[int, int]:
    # 2k <= n 그리고 n-k <= d
    return max(0, n - d), n // 2


def hs_pk(p: Params, k: int) -> ExactProb:
    """
    정확히 k 개의 2중 생일이 있고 3명 이상인 날이 없을 확률

    Args:
        p: 인스턴스
        k: 2중 생일 수

    Returns:
        정확한 유리수 (지지 집합 밖이면 0)
    """
    if k < 0:
        raise InvalidParamsError(f"k must be non-negative, got {k}")
    lo, hi = _support(p.n, p.d)
    if k < lo or k > hi:
        return Fraction(0)
    choose = math.prod(binomial(p.n - 2 * j, 2) for j in range(k))
    return Fraction(choose * falling_factorial(p.d, p.n - k), math.factorial(k) * p.d ** p.n)


def hs_distribution(p: Params, verify: bool = True) -> DistributionTable:
    """
    비율 점화식 p_k = p_{k-1} · (1/k) · C(n-2(k-1), 2) / (d-n+k) 로 전체 분포를 계산합니다.

    첫 번째 0 이 아닌 항 p_{max(0, n-d)} 에서 시작하므로 0/0 이 생기지 않습니다.
    n > d + floor(n/2) 이면 모든 p_k 가 0 이고 빈 표를 반환합니다.

    Args:
        p: 인스턴스
        verify: 각 항을 hs_pk 와 정확히 비교할지 여부
    """
    n, d = p.n, p.d
    lo, hi = _support(n, d)
    entries = {k: Fraction(0) for k in range(0, min(lo, hi + 1))}
    if lo <= hi:
        current = hs_pk(p, lo)
        entries[lo] = current
        for k in range(lo + 1, hi + 1):
            current = current * binomial(n - 2 * (k - 1), 2) / (k * (d - n + k))
            entries[k] = current

    if verify:
        for k, value in entries.items():
            if value != hs_pk(p, k):
                raise ArithmeticError(f"ratio recursion disagrees with closed form at k={k}")

    logger.debug(f"hs distribution n={n} d={d}: support {lo}..{hi}")
    return DistributionTable(entries=entries, provenance=Provenance.EXACT)


def prob_no_crowded_day(p: Params) -> ExactProb:
    """Σ_k p_k = P(3명 이상인 날이 없음)"""
    return hs_distribution(p, verify=False).total


def conditional_doubles(p: Params) -> Tuple[DistributionTable, Fraction]:
    """
    3명 이상인 날이 없다는 조건 하의 D 분포와 그 평균.

    Returns:
        (정규화된 표, 평균 Σ k p_k / Σ p_k)

    Raises:
        DegenerateInputError: Σ p_k = 0
    """
    table = hs_distribution(p, verify=False)
    total = table.total
    if total == 0:
        raise DegenerateInputError(
            f"no outcome avoids a day with three or more people for n={p.n}, d={p.d}"
        )
    conditional = table.normalized()
    return conditional, conditional.mean()


def nonpoisson_ratios(p: Params) -> List[Tuple[int, Fraction]]:
    """
    r_k = k p_k / p_{k-1}. Poisson 분포라면 상수여야 합니다.
    """
    table = hs_distribution(p, verify=False)
    ratios = []
    for k in table.support:
        previous = table.get(k - 1)
        if k >= 1 and previous > 0:
            ratios.append((k, k * table.get(k) / previous))
    return ratios


def figure1_rows(p: Params) -> List[Tuple[int, float, float]]:
    """
    조건부 정확 분포와, 같은 평균의 Poisson 분포를 k 별로 나란히 반환합니다.
    시뮬레이션 열은 CLI 에서 붙입니다.

    Returns:
        [(k, conditional_pk, poisson_ref), ...] (k 오름차순)
    """
    conditional, mean = conditional_doubles(p)
    mean_float = float(mean)
    rows = []
    for k in conditional.support:
        if mean_float > 0:
            reference = poisson_pmf(mean_float, k)
        else:
            reference = 1.0 if k == 0 else 0.0
        rows.append((k, float(conditional.get(k)), reference))
    return rows
