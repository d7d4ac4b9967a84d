from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import TypeAlias

# 모든 닫힌 형식 확률의 정확한 값 (기대값에도 같은 유리수 타입 사용)
ExactProb: TypeAlias = Fraction
Bracket: TypeAlias = Tuple[Fraction, Fraction]


class ExactModel(BaseModel):
    """Fraction 필드를 허용하는 불변 모델의 공통 설정"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class Params(ExactModel):
    """n 명, d 일 달력"""
    n: int = Field(ge=1, description="people count")
    d: int = Field(ge=1, description="number of days")


class Provenance(str, Enum):
    """분포표 값의 출처"""
    EXACT = "exact"
    BRACKETED = "bracketed"
    SIMULATED = "simulated"


class Statistic(str, Enum):
    """오라클이 법칙을 계산하는 통계량"""
    DOUBLES_COUNT = "doubles_count"
    TRIPLES_COUNT = "triples_count"
    MAX_MULTIPLICITY = "max_multiplicity"


class DistributionTable(ExactModel):
    """k -> 확률 표 (출처와 오차 한계 포함)"""
    entries: Dict[int, Fraction]
    provenance: Provenance
    error_bound: Fraction = Fraction(0)

    @model_validator(mode="after")
    def _check(self) -> "DistributionTable":
        if any(value < 0 for value in self.entries.values()):
            raise ValueError("distribution entries must be non-negative")
        if self.error_bound < 0:
            raise ValueError("error_bound must be non-negative")
        if self.provenance == Provenance.EXACT and self.error_bound != 0:
            raise ValueError("exact tables carry error_bound = 0")
        return self

    @property
    def total(self) -> Fraction:
        # 저장하지 않고 매번 다시 합산
        return sum(self.entries.values(), Fraction(0))

    @property
    def support(self) -> List[int]:
        return sorted(self.entries)

    def get(self, k: int) -> Fraction:
        return self.entries.get(k, Fraction(0))

    def mean(self) -> Fraction:
        return sum((k * p for k, p in self.entries.items()), Fraction(0))

    def normalized(self) -> "DistributionTable":
        total = self.total
        if total == 0:
            raise ZeroDivisionError("cannot normalize an all-zero table")
        return DistributionTable(
            entries={k: p / total for k, p in self.entries.items()},
            provenance=self.provenance,
            error_bound=self.error_bound / total,
        )

    def as_floats(self) -> Dict[int, float]:
        return {k: float(self.entries[k]) for k in self.support}


class PoissonSummary(BaseModel):
    """Poisson 근사 요약 (λ = n/d)"""
    mean_per_day: float
    pm2: float = Field(ge=0, le=1)
    pm3: float = Field(ge=0, le=1)
    expected_doubles: float = Field(ge=0)
    expected_triples: float = Field(ge=0)
    prob_at_least_one_triple_day: float = Field(ge=0, le=1)


class IndependenceReport(ExactModel):
    """쌍별 독립이지만 완전 독립은 아님을 보이는 정확한 값들"""
    pair_joint: Fraction
    pair_product: Fraction
    triple_cycle_joint: Fraction
    triple_cycle_product: Fraction


class DayValue(ExactModel):
    """C(n,r)/d^r 형태의 값. 1 을 넘으면 확률이 아님을 표시"""
    value: Fraction
    exceeds_one: bool


class BoundLadder(ExactModel):
    """q_k 항, 교대 부분합, 가장 좁은 (하한, 상한) 구간"""
    terms: List[Fraction]
    partial_sums: List[Fraction]
    bracket: Bracket
    converged: bool
    exhausted: bool = False
    valid_from: int = 1

    @model_validator(mode="after")
    def _check(self) -> "BoundLadder":
        if len(self.terms) != len(self.partial_sums):
            raise ValueError("terms and partial_sums must align")
        if any(term < 0 for term in self.terms):
            raise ValueError("inclusion-exclusion terms are non-negative")
        lower, upper = self.bracket
        if lower > upper:
            raise ValueError(f"bracket lower {lower} exceeds upper {upper}")
        return self

    @property
    def width(self) -> Fraction:
        return self.bracket[1] - self.bracket[0]


class OccupancyProfile(ExactModel):
    """(n_1, ..., n_{r-1}): 정확히 i 번 등장한 날의 수"""
    counts: Tuple[int, ...]
    n: int = Field(ge=0)
    M: int = Field(ge=1)
    r: int = Field(ge=2)

    def violations(self) -> List[str]:
        problems = []
        if len(self.counts) != self.r - 1:
            problems.append(f"expected {self.r - 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            problems.append("counts must be non-negative")
        people = sum(i * c for i, c in enumerate(self.counts, start=1))
        if people != self.n:
            problems.append(f"sum of i*n_i is {people}, expected n={self.n}")
        if sum(self.counts) > self.M:
            problems.append(f"{sum(self.counts)} occupied days exceed M={self.M}")
        return problems


class TauEntry(ExactModel):
    """τ_k = q_k × τ_0(n-3k, d-k) 의 구간 값"""
    k: int = Field(ge=0)
    q_factor: Fraction
    tau0_bracket: Bracket
    value_bracket: Bracket
    # 축소 인스턴스의 사다리를 terms 번째 항에서 멈춘 값 q_k (1 - S_terms)
    terms: Optional[int] = Field(default=None, ge=1)
    truncated_value: Optional[Fraction] = None

    @model_validator(mode="after")
    def _check(self) -> "TauEntry":
        for lower, upper in (self.tau0_bracket, self.value_bracket):
            if lower > upper:
                raise ValueError("bracket lower exceeds upper")
        return self

    @property
    def midpoint(self) -> Fraction:
        return (self.value_bracket[0] + self.value_bracket[1]) / 2

    @property
    def half_width(self) -> Fraction:
        return (self.value_bracket[1] - self.value_bracket[0]) / 2


class SimConfig(BaseModel):
    """몬테카를로 설정"""
    n: int = Field(ge=1)
    d: int = Field(ge=1)
    reps: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2 ** 64)
    threads: int = Field(default=0, ge=0, description="0 = auto")


class SimSummary(ExactModel):
    """T, D 의 경험 분포 (항목 = 횟수/반복수)"""
    t_law: DistributionTable
    d_law: DistributionTable
    d_law_given_t0: DistributionTable
    mean_doubles: float
    reps: int
    seed: int
    n: int
    d: int


class OracleResult(ExactModel):
    """오라클이 계산한 정확한 법칙"""
    statistic: Statistic
    law: DistributionTable
    instance: Params


class OutputEnvelope(BaseModel):
    """CLI JSON 출력 봉투"""
    command: str
    params: Dict[str, Any]
    format: str
    digits: int = Field(ge=1)
    rows: List[Dict[str, Any]]
    notes: List[str] = Field(default_factory=list)
    seed: Optional[int] = None
    summary: Optional[Dict[str, Any]] = None
