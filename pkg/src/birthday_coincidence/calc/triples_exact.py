"""
정확히 3명인 날의 수 T 의 분포

    τ_k(n,d) = q_k(n,d) · τ_0(n-3k, d-k)

k 개의 3중 생일을 고정하면 나머지 n-3k 명은 남은 d-k 일에 균등하게 분포하므로
축소된 인스턴스의 τ_0 를 같은 Bonferroni 사다리로 구합니다.
모든 값은 구간 (하한, 상한) 으로 전달됩니다.

terms 를 주면 사다리를 그 항에서 멈춘 값 1 - S_terms 도 함께 계산합니다.
출판된 표는 네 번째 한계에서 멈춘 값이므로 terms=4 로 재현됩니다.
"""
from fractions import Fraction
from typing import List, Optional

from birthday_coincidence.calc.bonferroni import Tolerance, partial_sum, q_value, triple_day_bracket
from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.prob import Bracket, DistributionTable, ExactProb, Params, Provenance, TauEntry
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="triples_exact")

DEFAULT_TOL = Fraction(1, 10 ** 9)

# 출판된 τ 표가 멈춘 항
PUBLISHED_TERMS = 4


def _tau0(n: int, d: int, tol: Fraction) -> Bracket:
    if n < 3:
        return Fraction(1), Fraction(1)
    lower, upper = triple_day_bracket(n, d, tol)
    return 1 - upper, 1 - lower


def _check_terms(terms: Optional[int]):
    if terms is not None and terms < 1:
        raise InvalidParamsError(f"terms must be >= 1, got {terms}")


def tau0(p: Params, tol: Tolerance = DEFAULT_TOL) -> Bracket:
    """
    τ_0(n,d) = P(정확히 3명인 날이 없음) 의 구간

    Raises:
        NonConvergenceError: Bonferroni 사다리에서 전파
    """
    return _tau0(p.n, p.d, Fraction(tol))


def truncated_tau0(p: Params, terms: int) -> ExactProb:
    """사다리를 terms 번째 항에서 멈춘 1 - S_terms (구간 보장 없음)"""
    _check_terms(terms)
    return 1 - partial_sum(p.n, p.d, terms)


def tau_k(p: Params, k: int, tol: Tolerance = DEFAULT_TOL, terms: Optional[int] = None) -> TauEntry:
    """
    τ_k(n,d) 의 구간 값

    Args:
        p: 인스턴스
        k: 3중 생일 수
        tol: 축소 인스턴스 τ_0 구간의 허용 폭
        terms: 주어지면 truncated_value = q_k · (1 - S_terms(n-3k, d-k)) 도 채움

    Returns:
        TauEntry (3k > n 또는 k > d 이면 정확히 0)
    """
    if k < 0:
        raise InvalidParamsError(f"k must be non-negative, got {k}")
    _check_terms(terms)
    zero = (Fraction(0), Fraction(0))
    q_factor = q_value(p.n, p.d, k)
    if q_factor == 0:
        return TauEntry(
            k=k, q_factor=q_factor, tau0_bracket=zero, value_bracket=zero,
            terms=terms, truncated_value=Fraction(0) if terms else None,
        )

    n_left, d_left = p.n - 3 * k, p.d - k
    lower, upper = _tau0(n_left, d_left, Fraction(tol))
    truncated = None
    if terms is not None:
        truncated = q_factor * (1 - partial_sum(n_left, d_left, terms))
    return TauEntry(
        k=k,
        q_factor=q_factor,
        tau0_bracket=(lower, upper),
        value_bracket=(q_factor * lower, q_factor * upper),
        terms=terms,
        truncated_value=truncated,
    )


def tau_entries(p: Params, k_max: int, tol: Tolerance = DEFAULT_TOL,
                terms: Optional[int] = None) -> List[TauEntry]:
    """k = 0..k_max 의 TauEntry 목록"""
    if k_max < 0:
        raise InvalidParamsError(f"k_max must be non-negative, got {k_max}")
    entries = [tau_k(p, k, tol, terms) for k in range(k_max + 1)]
    logger.debug(f"tau entries n={p.n} d={p.d} k_max={k_max} terms={terms}")
    return entries


def tau_table(p: Params, k_max: int, tol: Tolerance = DEFAULT_TOL) -> DistributionTable:
    """
    구간 중점을 값으로, 최대 반폭을 error_bound 로 하는 분포표 (provenance = bracketed)
    """
    entries = tau_entries(p, k_max, tol)
    return DistributionTable(
        entries={entry.k: entry.midpoint for entry in entries},
        provenance=Provenance.BRACKETED,
        error_bound=max((entry.half_width for entry in entries), default=Fraction(0)),
    )
