"""
날짜별 동적 계획법 오라클

하루씩 처리하면서 상태 = (아직 배정하지 않은 사람 수 r, 통계량) 의 가중치를 정수로 유지합니다.
오늘 c 명을 배정하는 전이의 가중치는 C(r, c) 이고, 마지막 날에는 남은 사람을 모두 배정합니다.
모든 날을 처리한 뒤 가중치 합은 정확히 d^n 이며 마지막에 한 번만 나눕니다.

통계량 축은 큰 정수 하나에 슬롯 단위로 묶어 둡니다 (슬롯 i = 통계량 값 i).
 - 2중/3중 생일 수: c 가 대상 중복도와 같으면 한 슬롯 위로 이동
 - 최대 중복도: 슬롯 m = "지금까지 모든 날의 인원 < m" 인 누적 가중치.
   c 명을 배정하면 m <= c 인 슬롯을 지웁니다.
"""
import math
from fractions import Fraction
from typing import Callable, Dict, List

from birthday_coincidence.errors import InstanceTooLargeError
from birthday_coincidence.oracle.common_oracle_interface import OracleInterface
from birthday_coincidence.schema.prob import (
    DistributionTable,
    OracleResult,
    Params,
    Provenance,
    Statistic,
)
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="oracle.dp")

DP_MAX_PEOPLE = 150
DP_MAX_DAYS = 400

# (오늘 배정 인원 c, 묶인 행) -> 전이 후의 묶인 행
RowTransition = Callable[[int, int], int]

_SPECIAL_MULTIPLICITY = {
    Statistic.DOUBLES_COUNT: 2,
    Statistic.TRIPLES_COUNT: 3,
}


def _slot_bits(n: int, d: int) -> int:
    # 어느 시점이든 슬롯 값은 d^n 이하
    return (d ** n).bit_length() + 1


def _sweep_days(n: int, d: int, start: int, transition: RowTransition) -> int:
    """
    d 일을 순서대로 처리하고 모든 사람이 배정된 상태의 묶인 행을 반환합니다.
    """
    choose = [[math.comb(r, c) for c in range(r + 1)] for r in range(n + 1)]
    rows: List[int] = [0] * (n + 1)
    rows[n] = start

    for day in range(1, d):
        updated = [0] * (n + 1)
        for r in range(n + 1):
            row = rows[r]
            if row == 0:
                continue
            weights = choose[r]
            for c in range(r + 1):
                moved = transition(c, row)
                if moved:
                    updated[r - c] += weights[c] * moved
        rows = updated
        if day % 50 == 0:
            logger.debug(f"dp sweep n={n} d={d}: {day} days processed")

    # 마지막 날에는 남은 r 명 전원을 배정
    final = 0
    for r in range(n + 1):
        if rows[r]:
            final += transition(r, rows[r])
    return final


def _unpack(packed: int, slot_bits: int, slots: int) -> List[int]:
    mask = (1 << slot_bits) - 1
    return [(packed >> (i * slot_bits)) & mask for i in range(slots)]


def _count_transition(special: int, slot_bits: int) -> RowTransition:
    def transition(c: int, row: int) -> int:
        return row << slot_bits if c == special else row

    return transition


def _max_transition(slot_bits: int) -> RowTransition:
    def transition(c: int, row: int) -> int:
        cut = (c + 1) * slot_bits
        return (row >> cut) << cut

    return transition


def _count_weights(n: int, d: int, statistic: Statistic) -> Dict[int, int]:
    special = _SPECIAL_MULTIPLICITY[statistic]
    bits = _slot_bits(n, d)
    packed = _sweep_days(n, d, 1, _count_transition(special, bits))
    weights = _unpack(packed, bits, n // special + 1)
    return {k: w for k, w in enumerate(weights) if w}


def _max_weights(n: int, d: int) -> Dict[int, int]:
    bits = _slot_bits(n, d)
    # 슬롯 1..n+1 모두 1 로 시작 (슬롯 0 은 "인원 < 0" 이라 항상 0)
    start = sum(1 << (m * bits) for m in range(1, n + 2))
    packed = _sweep_days(n, d, start, _max_transition(bits))
    below = _unpack(packed, bits, n + 2)
    # P(M = m) 의 분자 = G(m+1) - G(m), G(m) = "모든 날의 인원 < m" 인 배정 수
    return {m: below[m + 1] - below[m] for m in range(1, n + 1) if below[m + 1] != below[m]}


class DPOracle(OracleInterface):
    """n <= 150, d <= 400 에서 D, T, 최대 중복도의 정확한 주변 법칙"""

    name = "dp"

    def check_instance(self, p: Params) -> None:
        if p.n > DP_MAX_PEOPLE or p.d > DP_MAX_DAYS:
            logger.warning(f"dp oracle refused n={p.n} d={p.d}")
            raise InstanceTooLargeError(
                f"dp oracle cannot handle n={p.n}, d={p.d}",
                limit=f"n <= {DP_MAX_PEOPLE} and d <= {DP_MAX_DAYS}",
            )

    def law(self, p: Params, statistic: Statistic) -> OracleResult:
        self.check_instance(p)
        statistic = Statistic(statistic)
        logger.debug(f"dp law n={p.n} d={p.d} statistic={statistic.value}")
        if statistic == Statistic.MAX_MULTIPLICITY:
            weights = _max_weights(p.n, p.d)
        else:
            weights = _count_weights(p.n, p.d, statistic)

        total = p.d ** p.n
        if sum(weights.values()) != total:
            raise ArithmeticError(f"dp weights do not sum to {p.d}^{p.n}")
        entries = {k: Fraction(w, total) for k, w in sorted(weights.items())}
        logger.info(f"dp law n={p.n} d={p.d} {statistic.value}: {p.d} days processed")
        law = DistributionTable(entries=entries, provenance=Provenance.EXACT)
        return OracleResult(statistic=statistic, law=law, instance=p)


def dp_law(p: Params, statistic: Statistic) -> OracleResult:
    """날짜별 동적 계획법으로 구한 정확한 법칙"""
    return DPOracle().law(p, statistic)
