# poetry run pytest src/birthday_coincidence/test/test_config.py

import pytest

from birthday_coincidence.config import _int_env, config


def test_defaults():
    assert config.DEFAULT_SEED == 20180403
    assert (config.DEFAULT_PEOPLE, config.DEFAULT_DAYS) == (100, 365)
    assert config.COINCIDENCE_DIGITS >= 1


def test_int_env(monkeypatch):
    monkeypatch.setenv("COINCIDENCE_TEST_VALUE", "8")
    assert _int_env("COINCIDENCE_TEST_VALUE", 0, 0) == 8
    monkeypatch.setenv("COINCIDENCE_TEST_VALUE", " ")
    assert _int_env("COINCIDENCE_TEST_VALUE", 3, 0) == 3
    monkeypatch.delenv("COINCIDENCE_TEST_VALUE")
    assert _int_env("COINCIDENCE_TEST_VALUE", 4, 0) == 4


@pytest.mark.parametrize("raw", ["abc", "-1"])
def test_int_env_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv("COINCIDENCE_TEST_VALUE", raw)
    with pytest.raises(ValueError):
        _int_env("COINCIDENCE_TEST_VALUE", 0, 0)


def main():
    pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
