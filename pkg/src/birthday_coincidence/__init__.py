"""
생일 일치 확률의 정확한 계산 라이브러리

2중, 3중, r 중 생일 일치의 확률과 분포를 유리수로 정확히 계산하고
Poisson 근사, 단순 공식, 오라클, 시뮬레이션과 비교합니다.
"""

__version__ = "0.1.0"
