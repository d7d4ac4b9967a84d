# poetry run test-logger

import pytest

from birthday_coincidence.utils.logger import get_logger, remove_logger


def test_console_output_goes_to_stderr(capsys):
    logger = get_logger(name="stderr-check", force_new=True)
    logger.warning("경고 로그")
    logger.debug("디버그 로그")  # 기본 레벨 WARNING 에서는 출력되지 않음
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "경고 로그" in captured.err
    assert "[stderr-check]" in captured.err
    assert "디버그 로그" not in captured.err
    remove_logger("stderr-check")


def test_file_output(tmp_path):
    log_file = tmp_path / "runs" / "bonferroni.log"
    logger = get_logger(name="file-check", log_file=log_file, console_output=False, force_new=True)
    logger.error("에러 로그")
    logger.log_dict({"n": 100, "d": 365}, level=logger.ERROR, prefix="params.")
    logger.close()  # 임시 로거 다 쓰면 지워주기

    text = log_file.read_text()
    assert "에러 로그" in text
    assert "params.n: 100" in text
    remove_logger("file-check")


def test_cached_instance():
    first = get_logger(name="cache-check")
    assert get_logger(name="cache-check") is first
    remove_logger("cache-check")
    assert get_logger(name="cache-check") is not first
    remove_logger("cache-check")


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
