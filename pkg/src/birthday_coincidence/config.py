from dotenv import load_dotenv
import os


load_dotenv()


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


class Config:
    """설정 클래스 - 속성 접근 방식 사용"""
    # 시드를 생략했을 때 사용하는 고정 시드 (벽시계 시간은 절대 사용하지 않음)
    DEFAULT_SEED = 20180403

    # 시뮬레이터 병렬도 (0 = 자동), --threads 가 없을 때의 대체값
    COINCIDENCE_THREADS = _int_env("COINCIDENCE_THREADS", 0, 0)
    COINCIDENCE_SEED = _int_env("COINCIDENCE_SEED", DEFAULT_SEED, 0)
    if COINCIDENCE_SEED >= 2 ** 64:
        raise ValueError("COINCIDENCE_SEED must fit in 64 bits")

    # 출력 관련 기본값
    COINCIDENCE_DIGITS = _int_env("COINCIDENCE_DIGITS", 6, 1)
    COINCIDENCE_REPS = _int_env("COINCIDENCE_REPS", 1_000_000, 1)

    # 기본 계산 인스턴스 (100명, 365일)
    DEFAULT_PEOPLE = 100
    DEFAULT_DAYS = 365

    # 로깅 설정
    COINCIDENCE_LOG_LEVEL = os.getenv("COINCIDENCE_LOG_LEVEL", "WARNING").upper()
    if COINCIDENCE_LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ValueError(f"COINCIDENCE_LOG_LEVEL is not a valid level: {COINCIDENCE_LOG_LEVEL}")
    COINCIDENCE_LOG_DIR = os.getenv("COINCIDENCE_LOG_DIR") or None  # 미설정 시 파일 로그 없음


# 전역 설정 인스턴스 생성
config = Config()

# 다음과 같이 사용 가능:
# from birthday_coincidence.config import config
# seed = config.COINCIDENCE_SEED  # 속성 접근 방식
