"""
전수 열거 오라클: d^n 개의 모든 배정을 하나씩 세어 정확한 법칙을 구합니다.

배정 번호 0..d^n-1 의 d 진법 자릿수를 사람별 생일로 보고 numpy 로 청크 단위 집계합니다.
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

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

logger = get_logger(name="oracle.exhaustive")

EXHAUSTIVE_LIMIT = 10 ** 7
CHUNK_SIZE = 1 << 16

# (doubles, triples, max multiplicity)
Outcome = Tuple[int, int, int]


def _chunk_statistics(start: int, stop: int, n: int, d: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    배정 번호 [start, stop) 각각의 (2중 수, 3중 수, 최대 중복도)

    사람별 생일을 행마다 정렬한 뒤 같은 값이 이어지는 구간 길이가 곧 그 날의 중복도입니다.
    """
    rows = stop - start
    codes = np.arange(start, stop, dtype=np.int64)
    days = np.empty((rows, n), dtype=np.int64)
    for person in range(n):
        codes, days[:, person] = np.divmod(codes, d)
    days.sort(axis=1)

    starts = np.ones((rows, n), dtype=bool)
    starts[:, 1:] = days[:, 1:] != days[:, :-1]
    ends = np.ones((rows, n), dtype=bool)
    ends[:, :-1] = starts[:, 1:]

    start_pos = np.flatnonzero(starts)
    lengths = np.flatnonzero(ends) - start_pos + 1
    owner = start_pos // n

    doubles = np.bincount(owner[lengths == 2], minlength=rows)
    triples = np.bincount(owner[lengths == 3], minlength=rows)
    # 모든 행에는 구간이 하나 이상 있음 (n >= 1)
    first_run = np.flatnonzero(np.r_[True, owner[1:] != owner[:-1]])
    highest = np.maximum.reduceat(lengths, first_run)
    return doubles, triples, highest


def exhaustive_joint_law(p: Params) -> Dict[Outcome, Fraction]:
    """
    (2중 생일 수, 3중 생일 수, 최대 중복도) 의 정확한 결합 법칙

    Raises:
        InstanceTooLargeError: d^n > 10^7
    """
    ExhaustiveOracle().check_instance(p)
    n, d = p.n, p.d
    total = d ** n
    width_t = n // 3 + 1
    width_m = n + 1
    tally: Counter = Counter()
    for start in range(0, total, CHUNK_SIZE):
        stop = min(start + CHUNK_SIZE, total)
        doubles, triples, highest = _chunk_statistics(start, stop, n, d)
        keys = (doubles * width_t + triples) * width_m + highest
        values, counts = np.unique(keys, return_counts=True)
        for key, count in zip(values.tolist(), counts.tolist()):
            tally[key] += count

    joint = {}
    for key, count in sorted(tally.items()):
        rest, highest = divmod(key, width_m)
        doubles, triples = divmod(rest, width_t)
        joint[(doubles, triples, highest)] = Fraction(count, total)
    logger.debug(f"exhaustive joint law n={n} d={d}: {len(joint)} outcomes over {total} assignments")
    return joint


def doubles_without_crowding(joint: Dict[Outcome, Fraction]) -> Dict[int, Fraction]:
    """결합 법칙에서 P(D = k, 3명 이상인 날 없음) 을 읽어냅니다."""
    law: Dict[int, Fraction] = {}
    for (doubles, _, highest), prob in joint.items():
        if highest <= 2:
            law[doubles] = law.get(doubles, Fraction(0)) + prob
    return law


_POSITION = {
    Statistic.DOUBLES_COUNT: 0,
    Statistic.TRIPLES_COUNT: 1,
    Statistic.MAX_MULTIPLICITY: 2,
}


class ExhaustiveOracle(OracleInterface):
    """d^n <= 10^7 인 작은 인스턴스 전용"""

    name = "exhaustive"

    def check_instance(self, p: Params) -> None:
        if p.d ** p.n > EXHAUSTIVE_LIMIT:
            logger.warning(f"exhaustive oracle refused n={p.n} d={p.d}")
            raise InstanceTooLargeError(
                f"exhaustive enumeration of {p.d}^{p.n} assignments is too large",
                limit="d^n <= 10^7",
            )

    def law(self, p: Params, statistic: Statistic) -> OracleResult:
        joint = exhaustive_joint_law(p)
        position = _POSITION[Statistic(statistic)]
        entries: Dict[int, Fraction] = {}
        for outcome, prob in joint.items():
            value = outcome[position]
            entries[value] = entries.get(value, Fraction(0)) + prob
        law = DistributionTable(entries=dict(sorted(entries.items())), provenance=Provenance.EXACT)
        return OracleResult(statistic=statistic, law=law, instance=p)


def exhaustive_law(p: Params, statistic: Statistic) -> OracleResult:
    """모든 배정을 열거한 정확한 법칙"""
    return ExhaustiveOracle().law(p, statistic)
