# 오라클 패키지 초기화 파일
from .common_oracle_interface import OracleInterface
from .dp import DPOracle, dp_law
from .exhaustive import ExhaustiveOracle, exhaustive_joint_law, exhaustive_law

__all__ = [
    "OracleInterface",
    "DPOracle",
    "ExhaustiveOracle",
    "dp_law",
    "exhaustive_law",
    "exhaustive_joint_law",
]
