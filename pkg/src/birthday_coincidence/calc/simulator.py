"""
재현 가능한 몬테카를로 시뮬레이션

반복은 BLOCK_SIZE 개씩 블록으로 나누고, 블록 b 는 SeedSequence(seed, spawn_key=(b,)) 로
만든 Philox 스트림을 씁니다. 반복 r 의 난수는 (seed, r) 만으로 결정되므로
스레드 수와 관계없이 결과가 비트 단위로 같습니다.
"""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from birthday_coincidence.config import config
from birthday_coincidence.schema.prob import DistributionTable, Provenance, SimConfig, SimSummary
from birthday_coincidence.utils.logger import get_logger

logger = get_logger(name="simulator")

# 스레드 수와 무관한 고정 블록 크기
BLOCK_SIZE = 4096


def _block_generator(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def _simulate_block(cfg: SimConfig, block: int) -> np.ndarray:
    """
    블록 하나를 시뮬레이션하고 (D, T) 결합 횟수표를 반환합니다.

    Returns:
        shape (n//2 + 1, n//3 + 1) 정수 배열
    """
    n, d = cfg.n, cfg.d
    first = block * BLOCK_SIZE
    size = min(BLOCK_SIZE, cfg.reps - first)
    rng = _block_generator(cfg.seed, block)

    # Generator.integers 는 거부 방식이라 나머지 연산 편향이 없음
    days = rng.integers(0, d, size=(size, n), dtype=np.int64)
    # 반복마다 크기 d 의 중복도 히스토그램
    offsets = days + (np.arange(size, dtype=np.int64) * d)[:, None]
    histogram = np.bincount(offsets.ravel(), minlength=size * d).reshape(size, d)

    doubles = (histogram == 2).sum(axis=1)
    triples = (histogram == 3).sum(axis=1)
    width = n // 3 + 1
    joint = np.bincount(doubles * width + triples, minlength=(n // 2 + 1) * width)
    return joint.reshape(n // 2 + 1, width)


def _resolve_threads(requested: int) -> int:
    threads = requested or config.COINCIDENCE_THREADS
    return threads or os.cpu_count() or 1


def _table(counts: np.ndarray, reps: int) -> DistributionTable:
    entries = {k: Fraction(int(c), reps) for k, c in enumerate(counts.tolist()) if c}
    # 3σ 를 가장 큰 항목 기준으로
    sigma = max(
        (math.sqrt(float(p) * (1 - float(p)) / reps) for p in entries.values()),
        default=0.0,
    )
    return DistributionTable(
        entries=entries,
        provenance=Provenance.SIMULATED,
        error_bound=Fraction(3 * sigma),
    )


def simulate(cfg: SimConfig) -> SimSummary:
    """
    n 명의 생일을 d 일에 균등하게 뽑는 실험을 reps 번 반복합니다.

    Args:
        cfg: 시뮬레이션 설정 (threads = 0 이면 COINCIDENCE_THREADS, 그것도 0 이면 CPU 수)

    Returns:
        SimSummary (항목 = 횟수/반복수)
    """
    blocks = math.ceil(cfg.reps / BLOCK_SIZE)
    threads = min(_resolve_threads(cfg.threads), blocks)
    logger.debug(f"simulate n={cfg.n} d={cfg.d} reps={cfg.reps} seed={cfg.seed} threads={threads}")

    if threads == 1:
        partials = [_simulate_block(cfg, block) for block in range(blocks)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(lambda block: _simulate_block(cfg, block), range(blocks)))

    # 블록 순서대로 정수 합산
    joint = np.zeros_like(partials[0])
    for partial in partials:
        joint += partial

    d_counts = joint.sum(axis=1)
    t_counts = joint.sum(axis=0)
    given_t0 = joint[:, 0]
    t0_reps = int(given_t0.sum())
    mean_doubles = float(np.dot(np.arange(d_counts.size), d_counts)) / cfg.reps

    logger.info(f"simulation finished: {blocks} blocks, {cfg.reps} replicates")
    return SimSummary(
        t_law=_table(t_counts, cfg.reps),
        d_law=_table(d_counts, cfg.reps),
        d_law_given_t0=_table(given_t0, t0_reps) if t0_reps else DistributionTable(
            entries={}, provenance=Provenance.SIMULATED,
        ),
        mean_doubles=mean_doubles,
        reps=cfg.reps,
        seed=cfg.seed,
        n=cfg.n,
        d=cfg.d,
    )


def figure1_simulated(
    cfg: SimConfig, summary: Optional[SimSummary] = None
) -> List[Tuple[int, Fraction, Fraction]]:
    """
    D 의 무조건 경험 분포 (그림의 실선) 와 T=0 조건부 경험 분포를 k 별로 나란히 반환합니다.

    Args:
        cfg: 시뮬레이션 설정
        summary: 같은 설정으로 이미 계산한 결과가 있으면 재사용

    Returns:
        [(k, d_law[k], d_law_given_t0[k]), ...] (k 오름차순)
    """
    summary = summary or simulate(cfg)
    support = sorted(set(summary.d_law.entries) | set(summary.d_law_given_t0.entries))
    return [(k, summary.d_law.get(k), summary.d_law_given_t0.get(k)) for k in support]


def sim_summary_to_dict(summary: SimSummary) -> Dict[str, Any]:
    """JSON 출력용 dict (확률은 float)"""
    return {
        "n": summary.n,
        "d": summary.d,
        "reps": summary.reps,
        "seed": summary.seed,
        "mean_doubles": summary.mean_doubles,
        "t_law": {str(k): v for k, v in summary.t_law.as_floats().items()},
        "d_law": {str(k): v for k, v in summary.d_law.as_floats().items()},
        "d_law_given_t0": {str(k): v for k, v in summary.d_law_given_t0.as_floats().items()},
        "t_law_error_bound": float(summary.t_law.error_bound),
    }
