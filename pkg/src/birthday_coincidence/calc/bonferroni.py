"""
정확한 포함-배제 항 q_k(n,d) 와 Bonferroni 상/하한 사다리

A_i = 세 명 i=(i1,i2,i3) 가 같은 날 태어났고 그 날에 다른 사람은 없음.
q_k 는 서로소인 k 개 세 명 묶음이 각자 자기 날을 단독으로 차지할 확률들의 합이며,
목표 확률은 P(∪ A_i) = P(정확히 3명인 날이 하나 이상) 입니다.

    q_k(n,d) = (1/k!) Π_{j<k} C(n-3j, 3) · P_{d,k} · (d-k)^{n-3k} / d^n
"""
import math
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from birthday_coincidence.calc.exact_kernel import binomial, falling_factorial
from birthday_coincidence.errors import InvalidParamsError, NonConvergenceError
from birthday_coincidence.schema.prob import Bracket, BoundLadder, ExactProb, Params
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="bonferroni")

Tolerance = Union[Fraction, float, int]


def last_nonzero_index(n: int, d: int) -> int:
    """이 인덱스보다 큰 k 에서는 q_k = 0 (3k > n 또는 k > d)"""
    return min(n // 3, d)


def q_value(n: int, d: int, k: int) -> ExactProb:
    # 축소된 인스턴스 (n-3k, d-k) 에서도 쓰이므로 Params 검증 없이 정수를 받음
    if k < 0:
        raise InvalidParamsError(f"k must be non-negative, got {k}")
    if k == 0:
        return Fraction(1)
    if 3 * k > n or k > d:
        return Fraction(0)
    choose = math.prod(binomial(n - 3 * j, 3) for j in range(k))
    numerator = choose * falling_factorial(d, k) * (d - k) ** (n - 3 * k)
    return Fraction(numerator, math.factorial(k) * d ** n)


def q_term(p: Params, k: int) -> ExactProb:
    """
    포함-배제의 k 번째 항 (q_0 = 1)

    Args:
        p: 인스턴스 (n, d)
        k: 항 번호

    Returns:
        정확한 유리수, 3k > n 또는 k > d 이면 0
    """
    return q_value(p.n, p.d, k)


def tail_bound(p: Params, k_max: int) -> ExactProb:
    """사다리에서 쓰지 않은 다음 항 q_{k_max+1}"""
    return q_value(p.n, p.d, k_max + 1)


def _bracket(terms: List[Fraction], partial_sums: List[Fraction], exhausted: bool) -> Tuple[Bracket, int]:
    """
    지금까지의 부분합에서 가장 좁은 (하한, 상한) 을 고릅니다.

    항들이 끝까지 감소하기 시작한 지점(valid_from) 이후의 부분합만 교대 한계로 사용하고,
    그 전에는 k=1 (Boole) 상한만 사용합니다. 항이 모두 소진되었으면 합은 정확한 값입니다.
    """
    if not terms:
        return (Fraction(0), Fraction(0)), 1
    if exhausted:
        exact = partial_sums[-1]
        return (exact, exact), 1

    # 마지막부터 거꾸로 보며 단조 감소가 유지되는 가장 앞 인덱스 (1-based)
    valid_from = len(terms)
    while valid_from > 1 and terms[valid_from - 2] >= terms[valid_from - 1]:
        valid_from -= 1

    lower = Fraction(0)
    upper = min(Fraction(1), partial_sums[0])
    for m in range(valid_from, len(terms) + 1):
        s = partial_sums[m - 1]
        if m % 2 == 0:
            lower = max(lower, s)
        else:
            upper = min(upper, s)
    return (lower, upper), valid_from


def bound_ladder(p: Params, k_max: int, tol: Optional[Tolerance] = None) -> BoundLadder:
    """
    q_1 ... q_{k_max} 와 교대 부분합 S_m = Σ_{k<=m} (-1)^{k+1} q_k.

    홀수 m 의 S_m 은 상한, 짝수 m 은 하한입니다.

    Args:
        p: 인스턴스
        k_max: 사용할 항 수 (>= 1)
        tol: 주어지면 converged = (구간 폭 < tol)

    Returns:
        BoundLadder
    """
    if k_max < 1:
        raise InvalidParamsError(f"k_max must be >= 1, got {k_max}")
    if p.n < 3:
        # 3중 생일이 불가능: 목표 확률은 정확히 0, 사다리는 비어 있음
        return BoundLadder(
            terms=[], partial_sums=[], bracket=(Fraction(0), Fraction(0)),
            converged=True, exhausted=True,
        )

    terms: List[Fraction] = []
    partial_sums: List[Fraction] = []
    running = Fraction(0)
    for k in range(1, k_max + 1):
        term = q_value(p.n, p.d, k)
        running += term if k % 2 == 1 else -term
        terms.append(term)
        partial_sums.append(running)

    exhausted = k_max >= last_nonzero_index(p.n, p.d)
    bracket, valid_from = _bracket(terms, partial_sums, exhausted)
    width = bracket[1] - bracket[0]
    converged = width < Fraction(tol) if tol is not None else exhausted
    logger.debug(f"bound ladder n={p.n} d={p.d} k_max={k_max}: width={float(width):.3e}")
    return BoundLadder(
        terms=terms,
        partial_sums=partial_sums,
        bracket=bracket,
        converged=converged,
        exhausted=exhausted,
        valid_from=valid_from,
    )


def triple_day_bracket(n: int, d: int, tol: Fraction, max_terms: Optional[int] = None) -> Bracket:
    # 정수 인스턴스용 (n 이 0..2 인 축소 인스턴스 포함)
    if tol <= 0:
        raise InvalidParamsError(f"tol must be positive, got {tol}")
    if n < 3:
        return Fraction(0), Fraction(0)

    last = last_nonzero_index(n, d)
    limit = last if max_terms is None else min(max_terms, last)
    terms: List[Fraction] = []
    partial_sums: List[Fraction] = []
    running = Fraction(0)
    bracket: Bracket = (Fraction(0), Fraction(1))
    for k in range(1, limit + 1):
        term = q_value(n, d, k)
        running += term if k % 2 == 1 else -term
        terms.append(term)
        partial_sums.append(running)
        bracket, _ = _bracket(terms, partial_sums, exhausted=(k >= last))
        if bracket[1] - bracket[0] < tol:
            logger.debug(f"ladder n={n} d={d} converged after {k} terms")
            return bracket

    if limit == 0:
        raise NonConvergenceError(f"no inclusion-exclusion terms available for n={n}, d={d}")
    raise NonConvergenceError(
        f"Bonferroni ladder for n={n}, d={d} did not reach width < {float(tol):.3e} "
        f"within {limit} terms (bracket [{float(bracket[0])}, {float(bracket[1])}])"
    )


def prob_some_triple_day(p: Params, tol: Tolerance, max_terms: Optional[int] = None) -> Bracket:
    """
    구간 폭이 tol 보다 작아지거나 항이 소진될 때까지 사다리를 늘립니다.

    Args:
        p: 인스턴스
        tol: 허용 구간 폭 (> 0)
        max_terms: 사용할 최대 항 수 (None 이면 소진될 때까지, 이 경우 항상 수렴)

    Returns:
        (lower, upper)

    Raises:
        NonConvergenceError: max_terms 안에 tol 에 도달하지 못한 경우
    """
    return triple_day_bracket(p.n, p.d, Fraction(tol), max_terms)


def partial_sum(n: int, d: int, m: int) -> ExactProb:
    """
    사다리를 m 번째 항에서 멈춘 값 S_m (m 이 항의 수를 넘으면 정확한 합)

    홀수 m 은 상한, 짝수 m 은 하한이지만 구간 폭은 보장하지 않습니다.
    """
    if m < 0:
        raise InvalidParamsError(f"m must be non-negative, got {m}")
    if n < 3:
        return Fraction(0)
    total = Fraction(0)
    for k in range(1, min(m, last_nonzero_index(n, d)) + 1):
        term = q_value(n, d, k)
        total += term if k % 2 == 1 else -term
    return total
