"""
계산 모듈 공통 예외 정의

모든 예외는 ValueError 를 함께 상속하므로 호출자는 ValueError 로도 잡을 수 있습니다.
CLI 는 CoincidenceError 를 종료 코드 3 으로 매핑합니다.
"""


class CoincidenceError(ValueError):
    """birthday-coincidence 계산 오류의 기본 클래스"""


class InvalidParamsError(CoincidenceError):
    """n, d, k, tol, digits 등 입력 전제 조건 위반"""


class InvalidProfileError(CoincidenceError):
    """점유 프로파일 (n_1, ..., n_{r-1}) 이 불변식을 만족하지 않음"""


class InstanceTooLargeError(CoincidenceError):
    """오라클 가드 초과"""

    def __init__(self, message: str, limit: str):
        super().__init__(f"{message} (limit: {limit})")
        self.limit = limit


class NonConvergenceError(CoincidenceError):
    """Bonferroni 사다리가 요청한 허용오차에 도달하지 못함"""


class DegenerateInputError(CoincidenceError):
    """0 으로 정규화해야 하는 퇴화 입력"""
