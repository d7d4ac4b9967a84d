# Common oracle interface.
from abc import ABC, abstractmethod
from fractions import Fraction

from birthday_coincidence.schema.prob import OracleResult, Params, Statistic


class OracleInterface(ABC):
    """
    검증용 정확한 오라클 공통 인터페이스
    모든 오라클 구현체는 이 인터페이스를 상속받아야 함
    """

    name: str = "oracle"

    @abstractmethod
    def check_instance(self, p: Params) -> None:
        """
        인스턴스가 오라클의 가드 안에 있는지 확인

        Raises:
            InstanceTooLargeError: 가드를 넘는 경우
        """

    @abstractmethod
    def law(self, p: Params, statistic: Statistic) -> OracleResult:
        """
        통계량의 정확한 분포 (provenance = exact, 합계 = 1)

        Args:
            p: 인스턴스
            statistic: 통계량

        Returns:
            OracleResult
        """

    def prob_no_r_repeat(self, p: Params, r: int) -> Fraction:
        """최대 중복도가 r 미만일 확률"""
        result = self.law(p, Statistic.MAX_MULTIPLICITY)
        return sum((prob for m, prob in result.law.entries.items() if m < r), Fraction(0))

    def mean(self, p: Params, statistic: Statistic) -> Fraction:
        """통계량의 정확한 기대값"""
        return self.law(p, statistic).law.mean()
