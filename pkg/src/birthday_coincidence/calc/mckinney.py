"""
점유 프로파일 공식과 "r 번 이상 반복되는 값이 없음" 의 정확한 확률

X_1..X_n 이 {1..M} 에서 i.i.d. 균등일 때, n_i = 정확히 i 번 나온 값의 수.

    P_n(n_1, ..., n_{r-1}) = n! / Π_i (n_i! (i!)^{n_i}) · P_{M, Σ n_i} / M^n

P(G_r^c) 는 Σ i n_i = n 인 모든 프로파일에 대한 합입니다.
"""
import math
from fractions import Fraction
from typing import Iterator, Tuple

from birthday_coincidence.calc.exact_kernel import as_probability, falling_factorial
from birthday_coincidence.errors import InvalidParamsError, InvalidProfileError
from birthday_coincidence.schema.prob import ExactProb, OccupancyProfile
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="mckinney")


def _check(n: int, M: int, r: int):
    if n < 0:
        raise InvalidParamsError(f"n must be non-negative, got {n}")
    if M < 1:
        raise InvalidParamsError(f"M must be >= 1, got {M}")
    if r < 2:
        raise InvalidParamsError(f"r must be >= 2, got {r}")


def _profile_weight(n: int, M: int, counts: Tuple[int, ...]) -> int:
    """M^n 을 분모로 하는 프로파일의 분자 (정수)"""
    divisor = 1
    for i, count in enumerate(counts, start=1):
        divisor *= math.factorial(count) * math.factorial(i) ** count
    return math.factorial(n) // divisor * falling_factorial(M, sum(counts))


def profile_probability(prof: OccupancyProfile) -> ExactProb:
    """
    프로파일 하나의 정확한 확률

    Raises:
        InvalidProfileError: Σ i n_i != n 이거나 Σ n_i > M
    """
    problems = prof.violations()
    if problems:
        raise InvalidProfileError("; ".join(problems))
    return as_probability(Fraction(_profile_weight(prof.n, prof.M, prof.counts), prof.M ** prof.n))


def _higher_counts(remaining: int, top: int) -> Iterator[Tuple[int, ...]]:
    """
    (n_top, ..., n_2) 를 사전식으로 생성 (n_1 은 나중에 결정)
    remaining 은 아직 배정되지 않은 사람 수
    """
    if top < 2:
        yield ()
        return
    for count in range(remaining // top + 1):
        for rest in _higher_counts(remaining - top * count, top - 1):
            yield (count,) + rest


def enumerate_profiles(n: int, M: int, r: int) -> Iterator[OccupancyProfile]:
    """
    유효한 모든 프로파일을 (n_{r-1}, ..., n_2) 사전식 순서로 정확히 한 번씩 생성합니다.
    """
    _check(n, M, r)
    for higher in _higher_counts(n, r - 1):
        # higher = (n_{r-1}, ..., n_2)
        placed = sum(i * c for i, c in zip(range(r - 1, 1, -1), higher))
        singles = n - placed
        counts = (singles,) + tuple(reversed(higher))
        if sum(counts) <= M:
            yield OccupancyProfile(counts=counts, n=n, M=M, r=r)


def prob_no_r_repeat(n: int, M: int, r: int) -> ExactProb:
    """
    P(G_r^c): 어떤 값도 r 번 이상 나오지 않을 확률 (정확한 유리수)
    """
    _check(n, M, r)
    numerator = sum(_profile_weight(n, M, prof.counts) for prof in enumerate_profiles(n, M, r))
    return as_probability(Fraction(numerator, M ** n))


def threshold_n(M: int, r: int) -> Tuple[int, float, float]:
    """
    1 - P(G_r^c) >= 1/2 이 되는 가장 작은 n 을 위로 훑어서 찾습니다.

    Returns:
        (n_star, n_star-1 에서의 P(G_r), n_star 에서의 P(G_r))
    """
    _check(0, M, r)
    half = Fraction(1, 2)
    # n = r-1 에서는 r 번 반복이 불가능
    below = Fraction(0)
    n = r
    while True:
        hit = 1 - prob_no_r_repeat(n, M, r)
        if hit >= half:
            logger.info(f"threshold M={M} r={r}: n*={n}")
            return n, float(below), float(hit)
        below = hit
        n += 1
